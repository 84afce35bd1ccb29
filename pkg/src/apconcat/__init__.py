"""Closed-form evaluation of concatenated arithmetic progressions.

    >>> from apconcat import evaluate, NATURALS
    >>> evaluate("right", NATURALS, 9)
    12345678910
    >>> evaluate("palindromic", NATURALS, 3)
    1234321
"""

from .closed_form import (
    CoefficientCache,
    CoefficientSet,
    ExactDivisionError,
    coefficients_for_length,
    default_cache,
    evaluate,
    evaluate_mod,
    general_p,
    reverse_smarandache_coefficients,
    reverse_smarandache_p,
    smarandache_coefficients,
)
from .oracle import oracle_digit_count, oracle_eval
from .progression import (
    NATURALS,
    ArithmeticProgression,
    BlockGeometry,
    Kind,
    block_for_index,
    block_for_length,
    conc,
    concat_digit_count,
    digit_count,
    term,
)
from .recurrence import RecurrenceSpec, fit_recurrence, recurrence_for, verify_basis, verify_window

__version__ = "0.1.0"
