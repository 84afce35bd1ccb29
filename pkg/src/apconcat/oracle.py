"""Naive concatenation by building the decimal string.

This is the ground truth the closed forms are checked against, and the
baseline they are benchmarked against.  The string is parsed once with GMP;
CPython's own ``int(str)`` is quadratic and caps the digit count.
"""

from __future__ import annotations

import gmpy2

from .progression import ArithmeticProgression, Kind


def _right_digits(prog: ArithmeticProgression, n: int) -> str:
    return "".join(map(str, range(prog.u0, prog.u0 + (n + 1) * prog.d, prog.d)))


def _left_digits(prog: ArithmeticProgression, n: int) -> str:
    return "".join(map(str, range(prog.u0 + n * prog.d, prog.u0 - 1, -prog.d)))


def oracle_digits(kind: Kind | str, prog: ArithmeticProgression, n: int) -> str:
    """Decimal string of the ``n``-th concatenation."""
    kind = Kind.parse(kind)
    if n < 0:
        raise ValueError("index must be non-negative")
    if kind is Kind.RIGHT:
        return _right_digits(prog, n)
    if kind is Kind.LEFT:
        return _left_digits(prog, n)
    if n == 0:
        return str(prog.u0)
    return _right_digits(prog, n) + _left_digits(prog, n - 1)


def oracle_eval(kind: Kind | str, prog: ArithmeticProgression, n: int) -> int:
    return int(gmpy2.mpz(oracle_digits(kind, prog, n), 10))


def oracle_digit_count(kind: Kind | str, prog: ArithmeticProgression, n: int) -> int:
    return len(oracle_digits(kind, prog, n))
