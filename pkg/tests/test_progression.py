import pytest
from hypothesis import given, strategies as st

from apconcat.progression import (
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

from _oracles import naive_terms

progressions = st.builds(
    ArithmeticProgression, st.integers(1, 10 ** 6), st.integers(1, 10 ** 4)
)


def test_term():
    assert term(NATURALS, 5) == 6
    assert term(ArithmeticProgression(1, 2), 5) == 11
    assert term(NATURALS, 0) == 1
    assert ArithmeticProgression(5, 3)[4] == 17


@pytest.mark.parametrize("u0,d", [(0, 1), (1, 0), (-3, 2)])
def test_progression_rejects_nonpositive(u0, d):
    with pytest.raises(ValueError):
        ArithmeticProgression(u0, d)


@pytest.mark.parametrize("m,expected", [(1, 1), (9, 1), (10, 2), (99, 2), (999, 3), (1000, 4)])
def test_digit_count(m, expected):
    assert digit_count(m) == expected


@pytest.mark.parametrize("m", [0, -1])
def test_digit_count_rejects_nonpositive(m):
    with pytest.raises(ValueError):
        digit_count(m)


@given(st.integers(1, 10 ** 200))
def test_digit_count_brackets(m):
    k = digit_count(m)
    assert 10 ** (k - 1) <= m < 10 ** k
    assert k == len(str(m))


def test_digit_count_at_every_power_boundary():
    for k in range(1, 400):
        assert digit_count(10 ** k - 1) == k
        assert digit_count(10 ** k) == k + 1


@pytest.mark.parametrize(
    "prog,n,expected",
    [
        (NATURALS, 9, BlockGeometry(2, 9, 90)),
        (ArithmeticProgression(1, 2), 5, BlockGeometry(2, 5, 45)),
        (NATURALS, 0, BlockGeometry(1, 0, 9)),
    ],
)
def test_block_for_index(prog, n, expected):
    assert block_for_index(prog, n) == expected


def test_odd_numbers_block_uses_ceiling():
    # floor((10 - 1) / 2) = 4 would point at 9, still one digit
    odds = ArithmeticProgression(1, 2)
    assert term(odds, 4) == 9
    assert block_for_length(odds, 2).start == 5


def test_empty_block():
    b = block_for_length(ArithmeticProgression(5, 10), 1)
    assert b.count == 1
    assert block_for_length(ArithmeticProgression(7, 1000), 2).count == 0
    assert block_for_length(ArithmeticProgression(500, 1), 1).count == 0


@given(progressions, st.integers(0, 10 ** 6))
def test_block_contains_index(prog, n):
    b = block_for_index(prog, n)
    assert n in b
    assert digit_count(term(prog, b.start)) == b.l
    assert digit_count(term(prog, b.stop - 1)) == b.l
    if b.start > 0:
        assert digit_count(term(prog, b.start - 1)) < b.l
    assert digit_count(term(prog, b.stop)) > b.l


@given(progressions)
def test_blocks_tile(prog):
    l0 = digit_count(prog.u0)
    prev = block_for_length(prog, l0)
    assert prev.start == 0
    for l in range(l0 + 1, l0 + 8):
        b = block_for_length(prog, l)
        assert b.start == prev.stop
        prev = b


def test_conc():
    assert conc(12, 3, 1) == 123
    assert conc(0, 7, 3) == 7
    assert conc(12345678910, 11, 2) == 1234567891011
    assert conc(5, 7, 3) == 5007


def test_conc_rejects_wide_operand():
    with pytest.raises(ValueError):
        conc(1, 100, 2)


@given(st.integers(1, 10 ** 30), st.integers(1, 40), st.data())
def test_conc_digit_count(a, l, data):
    b = data.draw(st.integers(0, 10 ** l - 1))
    assert digit_count(conc(a, b, l)) == digit_count(a) + l


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("u0,d", [(1, 1), (1, 2), (5, 3), (10, 1), (7, 10), (3, 7), (95, 4)])
def test_concat_digit_count_matches_strings(kind, u0, d):
    prog = ArithmeticProgression(u0, d)
    for n in list(range(0, 60)) + [99, 100, 333, 1000]:
        assert concat_digit_count(kind, prog, n) == len(naive_terms(kind.value, u0, d, n))


def test_kind_parse():
    assert Kind.parse("Right") is Kind.RIGHT
    assert Kind.parse(Kind.LEFT) is Kind.LEFT
    with pytest.raises(ValueError):
        Kind.parse("middle")
