"""Order-3 constant-coefficient recurrences for fixed-length concatenations.

Inside one digit-length block every concatenation kind satisfies a linear
recurrence whose characteristic roots are powers of ``10**l``:

    right        (x - 1)**2 (x - 10**l)
    left         (x - 1) (x - 10**l)**2
    palindromic  (x - 1) (x - 10**l) (x - 10**(2*l))

Coefficient tuples are written highest shift first, ``(c3, c2, c1, c0)`` for
``c3*a(n+3) + c2*a(n+2) + c1*a(n+1) + c0*a(n) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

from .progression import Kind


@dataclass(frozen=True)
class RecurrenceSpec:
    kind: Kind
    l: int
    coeffs: tuple[int, int, int, int]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def recurrence_for(kind: Kind | str, l: int) -> RecurrenceSpec:
    kind = Kind.parse(kind)
    if l < 1:
        raise ValueError("digit length must be positive")
    x = 10 ** l
    if kind is Kind.RIGHT:
        coeffs = (1, -(x + 2), 2 * x + 1, -x)
    elif kind is Kind.LEFT:
        coeffs = (1, -(2 * x + 1), x * x + 2 * x, -x * x)
    else:
        coeffs = (1, -(1 + x + x * x), x + x * x + x ** 3, -x ** 3)
    return RecurrenceSpec(kind, l, coeffs)


def _coeffs(spec) -> tuple[int, ...]:
    return tuple(spec.coeffs) if isinstance(spec, RecurrenceSpec) else tuple(spec)


def residual(spec, window: Sequence[int]) -> int:
    """Left-hand side of the recurrence on one window ``a(n), ..., a(n+r)``."""
    c = _coeffs(spec)
    r = len(c) - 1
    if len(window) != r + 1:
        raise ValueError(f"window must hold {r + 1} values")
    return sum(ci * a for ci, a in zip(reversed(c), window))


def verify_window(spec, window: Sequence[int]) -> bool:
    """True iff every run of ``order + 1`` consecutive values satisfies ``spec``."""
    c = _coeffs(spec)
    r = len(c) - 1
    if len(window) < r + 1:
        raise ValueError(f"need at least {r + 1} values, got {len(window)}")
    return all(residual(c, window[i:i + r + 1]) == 0 for i in range(len(window) - r))


def char_poly_value(spec, x: int, derivative: int = 0) -> int:
    """Characteristic polynomial (or one of its derivatives) evaluated at ``x``."""
    c = list(reversed(_coeffs(spec)))  # c[i] multiplies x**i
    for _ in range(derivative):
        c = [i * ci for i, ci in enumerate(c)][1:]
    return sum(ci * x ** i for i, ci in enumerate(c))


def _nullspace(rows: list[list[int]]) -> list[list[Fraction]]:
    """Basis of the right nullspace of an integer matrix, via exact RREF."""
    m = [[Fraction(v) for v in row] for row in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [v / p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis


def _primitive(v: Sequence[Fraction]) -> list[int]:
    den = 1
    for f in v:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    ints = [a // g for a in ints]
    return ints


def fit_recurrence(terms: Sequence[int], order: int) -> tuple[int, ...] | None:
    """Guess a constant-coefficient recurrence of the given order.

    The first ``order + 1`` windows determine the coefficients exactly; every
    remaining window must then satisfy them.  Returns the primitive integer
    coefficients ``(c_order, ..., c_0)`` with ``c_order > 0``, or ``None``
    when no recurrence of that order explains all the terms.

    If the terms already satisfy a shorter recurrence, the shortest one is
    returned padded with trailing zeros (``a(n+3) - 2 a(n+2) = 0`` for powers
    of two at order 3), which keeps the answer unique.
    """
    terms = list(terms)
    if order < 1:
        raise ValueError("order must be positive")
    if len(terms) < 2 * order + 2:
        raise ValueError(f"need at least {2 * order + 2} terms for order {order}, got {len(terms)}")
    if not any(terms):
        return None
    return _fit(terms, order, order)


def _fit(terms, order, padded_order):
    if order < 1:
        return None
    # row i: a(i), a(i+1), ..., a(i+order) against (c_0, ..., c_order)
    rows = [terms[i:i + order + 1] for i in range(order + 1)]
    null = _nullspace(rows)
    if not null:
        return None
    if len(null) > 1:
        return _fit(terms, order - 1, padded_order)
    low_first = _primitive(null[0])
    if low_first[-1] == 0:
        return None
    if low_first[-1] < 0:
        low_first = [-a for a in low_first]
    coeffs = tuple(reversed(low_first)) + (0,) * (padded_order - order)
    if not verify_window(coeffs, terms):
        return None
    return coeffs


def basis_sequences(kind: Kind | str, l: int) -> list[Callable[[int], int]]:
    """The three fundamental solutions of ``recurrence_for(kind, l)``."""
    kind = Kind.parse(kind)
    if kind is Kind.RIGHT:
        return [lambda n: 1, lambda n: n, lambda n: 10 ** (l * n)]
    if kind is Kind.LEFT:
        return [lambda n: 1, lambda n: 10 ** (l * n), lambda n: n * 10 ** (l * n)]
    return [lambda n: 1, lambda n: 10 ** (l * n), lambda n: 10 ** (2 * l * n)]


def verify_basis(
    kind: Kind | str,
    l: int,
    sample_indices: Iterable[int],
    basis: Sequence[Callable[[int], int]] | None = None,
) -> bool:
    """Check that each basis sequence satisfies the recurrence at every sampled index.

    ``basis`` defaults to the known solutions for ``kind``; pass other
    sequences to test them against the same recurrence.
    """
    spec = recurrence_for(kind, l)
    if basis is None:
        basis = basis_sequences(kind, l)
    for n in sample_indices:
        for b in basis:
            if residual(spec, [b(n + i) for i in range(4)]) != 0:
                return False
    return True
