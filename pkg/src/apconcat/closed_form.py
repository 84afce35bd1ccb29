"""Closed-form terms of concatenated arithmetic progressions.

Within the block of ``l``-digit progression terms starting at index ``t``,
with ``k = n - t`` and ``x = 10**l``, each kind is a fixed combination of
three basis sequences:

    right        S(n) = (A + M*k + T*x**k) / D            D = (x - 1)**2
    left         S(n) = (A + M*x**k + T*k*x**k) / D       D = (x - 1)**2
    palindromic  S(n) = (A + M*x**k + T*x**(2*k)) / D     D = (x + 1)(x - 1)**2

``A``, ``M`` and ``T`` are exact integers, so every evaluation ends with a
single integer division by ``D`` that must leave no remainder.  They come
from the first three terms of the block, which in turn are built from the
last term of the previous block, so coefficients for long digit lengths are
computed by a short cascade through the shorter ones.

Big powers of ten go through GMP (``gmpy2``); CPython's int pow is far too
slow at millions of digits.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

import gmpy2

from .progression import (
    NATURALS,
    ArithmeticProgression,
    BlockGeometry,
    Kind,
    block_for_index,
    block_for_length,
    concat_digit_count,
    term,
)

__all__ = [
    "CoefficientSet",
    "CoefficientCache",
    "ExactDivisionError",
    "default_cache",
    "denominator",
    "coefficients_for_length",
    "evaluate",
    "evaluate_mod",
    "smarandache_coefficients",
    "reverse_smarandache_coefficients",
    "reverse_smarandache_p",
    "general_p",
]


class ExactDivisionError(ArithmeticError):
    """A closed-form numerator was not divisible by its denominator."""


def _pow10(e: int):
    return gmpy2.mpz(10) ** e


def denominator(kind: Kind, l: int) -> int:
    x = 10 ** l
    if kind is Kind.PALINDROMIC:
        return (x + 1) * (x - 1) ** 2
    return (x - 1) ** 2


@dataclass(frozen=True)
class CoefficientSet:
    """Scaled coefficients for one block.

    ``p`` is only set for left concatenations: the digit length of the
    block's first term, which fixes where new digits are prepended.
    """

    kind: Kind
    l: int
    start: int
    D: int
    A: int
    M: int
    T: int
    p: int | None = None

    def numerator(self, k: int):
        if k < 0:
            raise ValueError("offset into block must be non-negative")
        if self.kind is Kind.RIGHT:
            return self.A + self.M * k + self.T * _pow10(self.l * k)
        if self.kind is Kind.LEFT:
            return self.A + (self.M + self.T * k) * _pow10(self.l * k)
        y = _pow10(self.l * k)
        return self.A + self.M * y + self.T * y * y

    def value(self, k: int) -> int:
        q, r = gmpy2.f_divmod(self.numerator(k), self.D)
        if r:
            raise ExactDivisionError(
                f"{self.kind.value} l={self.l}: numerator at offset {k} leaves remainder {r} mod {self.D}"
            )
        return int(q)


class CoefficientCache:
    """Thread-safe memo of coefficient sets keyed by ``(kind, u0, d, l)``.

    Lookups take no lock.  Inserts are insert-if-absent under a lock, so
    when two threads race on the same key both get the first stored value.
    """

    def __init__(self):
        self._entries = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._entries.get(key)

    def insert(self, key, value):
        with self._lock:
            return self._entries.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._entries.clear()

    def __contains__(self, key):
        return key in self._entries

    def __len__(self):
        return len(self._entries)


default_cache = CoefficientCache()


def _usable_block(prog, l) -> BlockGeometry:
    block = block_for_length(prog, l)
    if block.count == 0:
        raise ValueError(f"no term of {prog} has exactly {l} digits")
    if block.count < 3:
        raise ValueError(
            f"the {l}-digit block of {prog} has {block.count} term(s); closed form needs at least 3"
        )
    return block


def coefficients_for_length(
    kind: Kind | str, prog: ArithmeticProgression, l: int, cache: CoefficientCache | None = None
) -> CoefficientSet:
    kind = Kind.parse(kind)
    if cache is None:
        cache = default_cache
    key = (kind, prog.u0, prog.d, l)
    hit = cache.get(key)
    if hit is not None:
        return hit

    block = _usable_block(prog, l)
    t, u, d = block.start, term(prog, block.start), prog.d
    x = 10 ** l
    D = denominator(kind, l)
    p = None

    if kind is Kind.RIGHT:
        s0 = gmpy2.mpz(evaluate(kind, prog, t - 1, cache) if t else 0) * x + u
        s1 = s0 * x + u + d
        s2 = s1 * x + u + 2 * d
        A = -((x - 1) * u + d * x)
        M = -d * (x - 1)
        T = s2 - 2 * s1 + s0
    elif kind is Kind.LEFT:
        p = concat_digit_count(kind, prog, t)
        shift = _pow10(p)
        s0 = (evaluate(kind, prog, t - 1, cache) if t else 0) + u * _pow10(p - l)
        s1 = s0 + (u + d) * shift
        s2 = s1 + (u + 2 * d) * shift * x
        A = s2 - 2 * x * s1 + x * x * s0
        M = ((x - 1) * u - d) * shift
        T = d * (x - 1) * shift
    else:
        s0, s1, s2 = (_palindromic_direct(prog, t + i, cache) for i in range(3))
        A = x ** 3 * s0 - x * (x + 1) * s1 + s2
        M = -(x + 1) * _exact_div(x * x * s0 - (x * x + 1) * s1 + s2, x)
        T = _exact_div(x * s0 - (x + 1) * s1 + s2, x)

    cs = CoefficientSet(kind, l, t, D, int(A), int(M), int(T), p)
    return cache.insert(key, cs)


def _exact_div(a, b):
    q, r = gmpy2.f_divmod(a, b)
    if r:
        raise ExactDivisionError(f"{b} does not divide the palindromic numerator")
    return q


def _palindromic_direct(prog, n, cache):
    # right(n) followed by left(n - 1), glued by digit length
    if n == 0:
        return gmpy2.mpz(prog.u0)
    right = evaluate(Kind.RIGHT, prog, n, cache)
    left = evaluate(Kind.LEFT, prog, n - 1, cache)
    return right * _pow10(concat_digit_count(Kind.LEFT, prog, n - 1)) + left


def evaluate(
    kind: Kind | str, prog: ArithmeticProgression, n: int, cache: CoefficientCache | None = None
) -> int:
    """Exact ``n``-th term of the concatenation of ``prog``."""
    kind = Kind.parse(kind)
    if n < 0:
        raise ValueError("index must be non-negative")
    if cache is None:
        cache = default_cache
    block = block_for_index(prog, n)
    if block.count >= 3:
        cs = coefficients_for_length(kind, prog, block.l, cache)
        return cs.value(n - block.start)
    return _extend(kind, prog, n, block, cache)


def _extend(kind, prog, n, block, cache):
    # short blocks: closed form up to the previous block, then direct concatenation
    if kind is Kind.PALINDROMIC:
        return int(_palindromic_direct(prog, n, cache))
    t = block.start
    acc = gmpy2.mpz(evaluate(kind, prog, t - 1, cache) if t else 0)
    if kind is Kind.RIGHT:
        x = 10 ** block.l
        for j in range(t, n + 1):
            acc = acc * x + term(prog, j)
    else:
        width = concat_digit_count(kind, prog, t - 1) if t else 0
        for j in range(t, n + 1):
            acc += term(prog, j) * _pow10(width)
            width += block.l
    return int(acc)


def evaluate_mod(
    kind: Kind | str,
    prog: ArithmeticProgression,
    n: int,
    m: int,
    cache: CoefficientCache | None = None,
) -> int:
    """``evaluate(kind, prog, n) % m`` without building the full term.

    Each block's numerator is reduced modulo ``m * D`` so the final division
    by ``D`` stays exact; the cascade that produces the coefficients runs
    under correspondingly larger moduli.  Coefficient residues are memoized
    in ``cache`` under the modulus they were computed for.
    """
    kind = Kind.parse(kind)
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if n < 0:
        raise ValueError("index must be non-negative")
    if cache is None:
        cache = default_cache
    return _residue(kind, prog, n, m, cache)


def _residue(kind, prog, n, mod, cache):
    block = block_for_index(prog, n)
    if block.count < 3:
        return _extend_mod(kind, prog, n, block, mod, cache)
    l, k = block.l, n - block.start
    D = denominator(kind, l)
    big = mod * D
    A, M, T = _coefficients_mod(kind, prog, block, big, cache)
    y = pow(10, l * k, big)
    if kind is Kind.RIGHT:
        num = A + M * k + T * y
    elif kind is Kind.LEFT:
        num = A + (M + T * k) * y
    else:
        num = A + M * y + T * y * y
    q, r = divmod(num % big, D)
    if r:
        raise ExactDivisionError(f"{kind.value} l={l}: residue numerator not divisible by {D}")
    return q


def _coefficients_mod(kind, prog, block, big, cache):
    key = (kind, prog.u0, prog.d, block.l, big)
    hit = cache.get(key)
    if hit is not None:
        return hit
    t, u, d, l = block.start, term(prog, block.start), prog.d, block.l
    x = 10 ** l
    if kind is Kind.RIGHT:
        prev = _residue(kind, prog, t - 1, big, cache) if t else 0
        s0 = (prev * x + u) % big
        s1 = (s0 * x + u + d) % big
        s2 = (s1 * x + u + 2 * d) % big
        coeffs = (-((x - 1) * u + d * x) % big, -d * (x - 1) % big, (s2 - 2 * s1 + s0) % big)
    elif kind is Kind.LEFT:
        p = concat_digit_count(kind, prog, t)
        prev = _residue(kind, prog, t - 1, big, cache) if t else 0
        shift = pow(10, p, big)
        s0 = (prev + u * pow(10, p - l, big)) % big
        s1 = (s0 + (u + d) * shift) % big
        s2 = (s1 + (u + 2 * d) * shift * x) % big
        coeffs = (
            (s2 - 2 * x * s1 + x * x * s0) % big,
            ((x - 1) * u - d) * shift % big,
            d * (x - 1) * shift % big,
        )
    else:
        # the two numerators divided by x must be known modulo big, so work mod big*x
        wide = big * x
        s0, s1, s2 = (_palindromic_mod(prog, t + i, wide, cache) for i in range(3))
        n1 = (x * x * s0 - (x * x + 1) * s1 + s2) % wide
        n2 = (x * s0 - (x + 1) * s1 + s2) % wide
        if n1 % x or n2 % x:
            raise ExactDivisionError("palindromic residues not divisible by 10**l")
        coeffs = (
            (x ** 3 * s0 - x * (x + 1) * s1 + s2) % big,
            -(x + 1) * (n1 // x) % big,
            (n2 // x) % big,
        )
    return cache.insert(key, coeffs)


def _palindromic_mod(prog, n, mod, cache):
    if n == 0:
        return prog.u0 % mod
    right = _residue(Kind.RIGHT, prog, n, mod, cache)
    left = _residue(Kind.LEFT, prog, n - 1, mod, cache)
    return (right * pow(10, concat_digit_count(Kind.LEFT, prog, n - 1), mod) + left) % mod


def _extend_mod(kind, prog, n, block, mod, cache):
    if kind is Kind.PALINDROMIC:
        return _palindromic_mod(prog, n, mod, cache)
    t = block.start
    acc = _residue(kind, prog, t - 1, mod, cache) if t else 0
    if kind is Kind.RIGHT:
        x = 10 ** block.l
        for j in range(t, n + 1):
            acc = (acc * x + term(prog, j)) % mod
    else:
        width = concat_digit_count(kind, prog, t - 1) if t else 0
        for j in range(t, n + 1):
            acc = (acc + term(prog, j) * pow(10, width, mod)) % mod
            width += block.l
    return acc


@lru_cache(maxsize=None)
def smarandache_coefficients(l: int) -> CoefficientSet:
    """Right-concatenation coefficients for 1, 2, 3, ... from the direct formulas.

    Only the ``x**k`` coefficient needs the cascade; the others are closed
    expressions in ``l``.  Kept independent of :func:`coefficients_for_length`
    so the two can be checked against each other.
    """
    if l < 1:
        raise ValueError("digit length must be positive")
    x = 10 ** l
    t = 10 ** (l - 1) - 1
    A = -(10 ** (2 * l - 1) + 9 * 10 ** (l - 1))
    M = -(x - 1)
    return CoefficientSet(Kind.RIGHT, l, t, (x - 1) ** 2, A, M, _smarandache_theta_numerator(l))


def _smarandache_theta_numerator(l):
    if l == 1:
        return 100
    t = 10 ** (l - 1) - 1
    # last (l-1)-digit term, index t - 1, from the previous block's own formula
    prev = smarandache_coefficients(l - 1)
    s0 = gmpy2.mpz(prev.value(t - 1 - prev.start)) * 10 ** l + t + 1
    s1 = s0 * 10 ** l + t + 2
    s2 = s1 * 10 ** l + t + 3
    return int(s2 - 2 * s1 + s0)


def reverse_smarandache_p(l: int) -> int:
    """Digit length of the first term of the ``l``-digit block of 1, 21, 321, ..."""
    if l < 1:
        raise ValueError("digit length must be positive")
    q, r = divmod(10 ** (l - 1) * (9 * l - 10) + 9 * l + 1, 9)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def reverse_smarandache_coefficients(l: int) -> CoefficientSet:
    """Left-concatenation coefficients for 1, 2, 3, ... from the direct formulas."""
    if l < 1:
        raise ValueError("digit length must be positive")
    x = 10 ** l
    t = 10 ** (l - 1) - 1
    p = reverse_smarandache_p(l)
    shift = _pow10(p)
    if l == 1:
        prev = 0
    else:
        cs = reverse_smarandache_coefficients(l - 1)
        prev = cs.value(t - 1 - cs.start)
    s0 = prev + (t + 1) * _pow10(p - l)
    s1 = s0 + (t + 2) * shift
    s2 = s1 + (t + 3) * shift * x
    A = s2 - 2 * x * s1 + x * x * s0
    M = shift * (10 ** (2 * l - 1) - 10 ** (l - 1) - 1)
    T = shift * (x - 1)
    return CoefficientSet(Kind.LEFT, l, t, (x - 1) ** 2, int(A), int(M), int(T), p)


def general_p(prog: ArithmeticProgression, l: int) -> int:
    """Digit length of the first ``l``-digit-block term of the left concatenation."""
    block = block_for_length(prog, l)
    if block.count == 0:
        raise ValueError(f"no term of {prog} has exactly {l} digits")
    return concat_digit_count(Kind.LEFT, prog, block.start)
