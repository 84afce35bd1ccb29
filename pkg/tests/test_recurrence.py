import pytest
from hypothesis import given, strategies as st

from apconcat.oracle import oracle_eval
from apconcat.progression import NATURALS, ArithmeticProgression, Kind, block_for_length
from apconcat.recurrence import (
    char_poly_value,
    fit_recurrence,
    recurrence_for,
    residual,
    verify_basis,
    verify_window,
)

PROGS = [(1, 1), (1, 2), (5, 3), (10, 1), (7, 10), (3, 7)]


def sm(lo, hi):
    return [oracle_eval(Kind.RIGHT, NATURALS, n) for n in range(lo, hi + 1)]


@pytest.mark.parametrize(
    "kind,l,coeffs",
    [
        (Kind.RIGHT, 1, (1, -12, 21, -10)),
        (Kind.RIGHT, 2, (1, -102, 201, -100)),
        (Kind.RIGHT, 3, (1, -1002, 2001, -1000)),
        (Kind.LEFT, 1, (1, -21, 120, -100)),
        (Kind.PALINDROMIC, 1, (1, -111, 1110, -1000)),
    ],
)
def test_recurrence_for(kind, l, coeffs):
    spec = recurrence_for(kind, l)
    assert spec.coeffs == coeffs
    assert spec.order == 3


def test_small_recurrences_hold_on_first_terms():
    assert verify_window(recurrence_for(Kind.LEFT, 1), [1, 21, 321, 4321])
    assert verify_window(recurrence_for(Kind.PALINDROMIC, 1), [1, 121, 12321, 1234321])


def test_verify_window():
    spec = recurrence_for(Kind.RIGHT, 1)
    assert verify_window(spec, [1, 12, 123, 1234])
    assert not verify_window(spec, [1, 12, 123, 1235])
    smr = [oracle_eval(Kind.LEFT, NATURALS, n) for n in range(9, 14)]
    assert verify_window(recurrence_for(Kind.LEFT, 2), smr)
    with pytest.raises(ValueError):
        verify_window(spec, [1, 12, 123])


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("u0,d", PROGS)
def test_in_block_windows(kind, u0, d):
    prog = ArithmeticProgression(u0, d)
    for l in range(1, 7):
        b = block_for_length(prog, l)
        if b.count < 4:
            continue
        spec = recurrence_for(kind, l)
        starts = {b.start, b.start + 1}
        if b.stop <= 10 ** 5:
            starts.add(b.stop - 4)
        for s in sorted(starts):
            window = [oracle_eval(kind, prog, n) for n in range(s, s + 4)]
            assert verify_window(spec, window), (kind, u0, d, l, s)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("l", range(1, 7))
def test_characteristic_roots(kind, l):
    spec = recurrence_for(kind, l)
    x = 10 ** l
    assert char_poly_value(spec, 1) == 0
    assert char_poly_value(spec, x) == 0
    if kind is Kind.RIGHT:
        assert char_poly_value(spec, 1, derivative=1) == 0
        assert char_poly_value(spec, x, derivative=1) != 0
    elif kind is Kind.LEFT:
        assert char_poly_value(spec, x, derivative=1) == 0
        assert char_poly_value(spec, 1, derivative=1) != 0
    else:
        assert char_poly_value(spec, x * x) == 0


def test_fit_rediscovers_right_recurrences():
    assert fit_recurrence(sm(0, 7), 3) == (1, -12, 21, -10)
    assert fit_recurrence(sm(9, 16), 3) == (1, -102, 201, -100)
    assert fit_recurrence(sm(99, 110), 3) == (1, -1002, 2001, -1000)


def test_fit_geometric():
    assert fit_recurrence([1, 2, 4, 8, 16, 32, 64, 128], 1) == (1, -2)


def test_fit_lower_order_data_is_padded():
    assert fit_recurrence([1, 2, 4, 8, 16, 32, 64, 128], 3) == (1, -2, 0, 0)
    fib = [0, 1]
    for _ in range(12):
        fib.append(fib[-1] + fib[-2])
    assert fit_recurrence(fib, 2) == (1, -1, -1)
    assert fit_recurrence(fib, 3) == (1, -1, -1, 0)


def test_fit_across_blocks_fails():
    assert fit_recurrence(sm(0, 15), 3) is None


def test_fit_all_zero_and_short_input():
    assert fit_recurrence([0] * 10, 3) is None
    with pytest.raises(ValueError):
        fit_recurrence(sm(0, 6), 3)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("u0,d", PROGS)
def test_fit_matches_lemma_on_block_data(kind, u0, d):
    prog = ArithmeticProgression(u0, d)
    for l in range(1, 4):
        b = block_for_length(prog, l)
        if b.count < 8:
            continue
        terms = [oracle_eval(kind, prog, n) for n in range(b.start, b.start + 8)]
        assert fit_recurrence(terms, 3) == recurrence_for(kind, l).coeffs


@given(
    st.lists(st.integers(-5, 5), min_size=2, max_size=2),
    st.lists(st.integers(-50, 50), min_size=2, max_size=2),
)
def test_fit_recovers_random_order2(c, init):
    # a(n+2) = c0*a(n+1) + c1*a(n); only sequences whose data pin the recurrence down
    terms = list(init)
    for _ in range(10):
        terms.append(c[0] * terms[-1] + c[1] * terms[-2])
    fit = fit_recurrence(terms, 2)
    if fit is not None:
        assert verify_window(fit, terms)
        assert fit[0] > 0


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("l", range(1, 7))
def test_verify_basis(kind, l):
    assert verify_basis(kind, l, range(11))


def test_verify_basis_rejects_foreign_sequence():
    assert not verify_basis(Kind.RIGHT, 1, range(11), basis=[lambda n: n * 10 ** n])
    assert verify_basis(Kind.LEFT, 1, range(11), basis=[lambda n: n * 10 ** n])


def test_residual_of_right_recurrence_on_left_data():
    window = [oracle_eval(Kind.LEFT, NATURALS, n) for n in range(4)]
    assert residual(recurrence_for(Kind.RIGHT, 1), window) != 0
