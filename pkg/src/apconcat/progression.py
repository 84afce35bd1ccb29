"""Arithmetic progressions, decimal digit lengths and block geometry.

A progression ``U(n) = u0 + n*d`` is split into *blocks*: maximal runs of
consecutive indices whose terms share the same number of decimal digits.
Everything here is exact integer arithmetic; no logarithms are taken.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache


class Kind(enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    PALINDROMIC = "palindromic"

    @classmethod
    def parse(cls, value: "str | Kind") -> "Kind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown concatenation kind: {value!r}") from None


@dataclass(frozen=True)
class ArithmeticProgression:
    u0: int
    d: int

    def __post_init__(self):
        if not isinstance(self.u0, int) or not isinstance(self.d, int):
            raise TypeError("u0 and d must be integers")
        if self.u0 < 1 or self.d < 1:
            raise ValueError(f"need u0 >= 1 and d >= 1, got u0={self.u0}, d={self.d}")

    def __getitem__(self, n: int) -> int:
        return term(self, n)


#: the positive integers 1, 2, 3, ...
NATURALS = ArithmeticProgression(1, 1)


@dataclass(frozen=True)
class BlockGeometry:
    """Indices ``start <= n < start + count`` whose terms have ``l`` digits."""

    l: int
    start: int
    count: int

    @property
    def stop(self) -> int:
        return self.start + self.count

    def __contains__(self, n: int) -> bool:
        return self.start <= n < self.stop


def term(prog: ArithmeticProgression, n: int) -> int:
    if n < 0:
        raise ValueError("index must be non-negative")
    return prog.u0 + n * prog.d


def digit_count(m: int) -> int:
    """Number of decimal digits of a positive integer."""
    if m <= 0:
        raise ValueError(f"digit_count needs a positive integer, got {m}")
    # bit_length gives an estimate within one of the answer
    k = (m.bit_length() * 1233) >> 12
    if k < 1:
        k = 1
    while 10 ** k <= m:
        k += 1
    while k > 1 and 10 ** (k - 1) > m:
        k -= 1
    return k


def _first_index_with_digits(prog: ArithmeticProgression, l: int) -> int:
    # ceiling division; the floor variant lands on an (l-1)-digit term
    # whenever d does not divide 10**(l-1) - u0
    gap = 10 ** (l - 1) - prog.u0
    if gap <= 0:
        return 0
    return -(-gap // prog.d)


@lru_cache(maxsize=4096)
def block_for_length(prog: ArithmeticProgression, l: int) -> BlockGeometry:
    """Geometry of the ``l``-digit block; ``count`` is 0 for an empty block."""
    if l < 1:
        raise ValueError("digit length must be positive")
    start = _first_index_with_digits(prog, l)
    stop = _first_index_with_digits(prog, l + 1)
    return BlockGeometry(l, start, stop - start)


def block_for_index(prog: ArithmeticProgression, n: int) -> BlockGeometry:
    return block_for_length(prog, digit_count(term(prog, n)))


def blocks(prog: ArithmeticProgression, n: int):
    """Yield the non-empty blocks covering indices ``0..n``, truncated at ``n``."""
    last = digit_count(term(prog, n))
    for l in range(digit_count(prog.u0), last + 1):
        b = block_for_length(prog, l)
        if b.count == 0:
            continue
        if b.stop > n + 1:
            b = BlockGeometry(l, b.start, n + 1 - b.start)
        yield b


def conc(a: int, b: int, l: int) -> int:
    """Append ``b``, zero-padded to width ``l``, to the right of ``a``."""
    if not 0 <= b < 10 ** l:
        raise ValueError(f"{b} does not fit in {l} digits")
    return a * 10 ** l + b


def concat_digit_count(kind: Kind | str, prog: ArithmeticProgression, n: int) -> int:
    """Digit length of the ``n``-th concatenation, by block arithmetic only.

    Right and left concatenations use the same digits in a different order;
    the palindromic term is ``right(n)`` followed by ``left(n - 1)``.
    """
    kind = Kind.parse(kind)
    if n < 0:
        raise ValueError("index must be non-negative")
    total = sum(b.l * b.count for b in blocks(prog, n))
    if kind is Kind.PALINDROMIC and n > 0:
        total += concat_digit_count(Kind.LEFT, prog, n - 1)
    return total
