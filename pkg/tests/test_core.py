from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menage import core
from menage.core import (
    DomainError,
    InexactDivisionError,
    binomial,
    domino_count,
    domino_count_alt,
    factorial,
    menage_count,
    tait_count,
    tait_count_direct,
    tait_count_incremental,
    tait_sequence,
    touchard_breakdown,
    touchard_term,
)


def product_factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def pascal(a, b):
    row = [1]
    for _ in range(a):
        row = [1] + [x + y for x, y in zip(row, row[1:])] + [1]
    return row[b] if 0 <= b <= a else 0


def cycle_placements(m, r):
    """Independent count: r-subsets of edges of C_m with no shared vertex."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    return sum(
        1
        for chosen in combinations(edges, r)
        if len({v for e in chosen for v in e}) == 2 * r
    )


# -- factorial / binomial -----------------------------------------------------


@pytest.mark.parametrize("k, want", [(0, 1), (1, 1), (10, 3628800)])
def test_factorial_examples(k, want):
    assert factorial(k) == want
    assert product_factorial(k) == want


def test_factorial_rejects_negative():
    with pytest.raises(DomainError):
        factorial(-1)


@pytest.mark.parametrize("a, b, want", [(5, 0, 1), (5, 7, 0), (13, 3, 286), (5, -1, 0)])
def test_binomial_examples(a, b, want):
    assert binomial(a, b) == want
    assert pascal(a, b) == want


def test_binomial_rejects_negative_top():
    with pytest.raises(DomainError):
        binomial(-1, 0)


@given(st.integers(0, 60), st.integers(-3, 63))
def test_binomial_matches_pascal(a, b):
    assert binomial(a, b) == pascal(a, b)


@given(st.integers(0, 150))
def test_factorial_matches_product(k):
    assert factorial(k) == product_factorial(k)


# -- domino counts ------------------------------------------------------------


@pytest.mark.parametrize("m, r, want", [(16, 0, 1), (16, 3, 352), (8, 4, 2), (6, 1, 6)])
def test_domino_count_examples(m, r, want):
    assert domino_count(m, r) == want
    assert cycle_placements(m, r) == want


@pytest.mark.parametrize("m, r, want", [(16, 3, 352), (8, 4, 2), (6, 1, 6)])
def test_domino_count_alt_examples(m, r, want):
    assert domino_count_alt(m, r) == want


def test_domino_count_zero_when_overfull():
    assert domino_count(7, 4) == 0
    assert domino_count(16, 9) == 0


@pytest.mark.parametrize("m, r", [(2, 1), (2, 0), (1, 0), (5, -1)])
def test_domino_count_rejects(m, r):
    with pytest.raises(DomainError):
        domino_count(m, r)


@pytest.mark.parametrize("m, r", [(16, 0), (2, 1), (7, 4)])
def test_domino_count_alt_rejects(m, r):
    with pytest.raises(DomainError):
        domino_count_alt(m, r)


def test_domino_count_rejects_non_integers():
    with pytest.raises(DomainError):
        domino_count(16.0, 3)
    with pytest.raises(DomainError):
        domino_count(True, 0)


@pytest.mark.parametrize("m", range(3, 13))
def test_domino_count_matches_edge_subsets(m):
    for r in range(m // 2 + 2):
        assert domino_count(m, r) == cycle_placements(m, r)


def test_closed_forms_agree_up_to_200():
    for m in range(3, 201):
        for r in range(1, m // 2 + 1):
            assert domino_count(m, r) == domino_count_alt(m, r), (m, r)


def test_domino_division_exact_up_to_200():
    for m in range(3, 201):
        for r in range(m // 2 + 1):
            assert (m * binomial(m - r, r)) % (m - r) == 0, (m, r)


def test_domino_boundaries_up_to_200():
    for m in range(4, 201, 2):
        assert domino_count(m, 0) == 1
        assert domino_count(m, m // 2) == 2


@given(st.integers(3, 400), st.data())
def test_domino_closed_forms_property(m, data):
    r = data.draw(st.integers(1, m // 2))
    assert domino_count(m, r) == domino_count_alt(m, r)


def test_exact_div_raises_on_remainder():
    assert core.exact_div(12, 4) == 3
    with pytest.raises(InexactDivisionError):
        core.exact_div(13, 4)


# -- Touchard terms and sums --------------------------------------------------


@pytest.mark.parametrize("n", range(2, 12))
def test_touchard_term_r0_is_factorial(n):
    assert touchard_term(n, 0) == product_factorial(n)


def test_touchard_term_examples():
    # (-1)^3 * 2 tilings of a 6-cycle * 0!
    assert touchard_term(3, 3) == -2
    # -(4/3) * C(3, 1) * 1!
    assert touchard_term(2, 1) == -4


@pytest.mark.parametrize("n, r", [(2, 3), (3, -1), (1, 0), (0, 0)])
def test_touchard_term_rejects(n, r):
    with pytest.raises(DomainError):
        touchard_term(n, r)


# values from the permutation scan in menage.oracles
@pytest.mark.parametrize("n, want", [(2, 0), (3, 1), (4, 2), (5, 13), (6, 80), (7, 579), (8, 4738)])
def test_tait_count_small(n, want):
    assert tait_count(n) == want
    assert tait_count_direct(n) == want
    assert touchard_breakdown(n).total == want


@pytest.mark.parametrize("n, want", [(2, 0), (3, 12), (4, 96), (5, 3120)])
def test_menage_count_small(n, want):
    assert menage_count(n) == want


@pytest.mark.parametrize("fn", [tait_count, menage_count, tait_count_direct, touchard_breakdown])
@pytest.mark.parametrize("n", [1, 0, -3])
def test_small_n_rejected(fn, n):
    with pytest.raises(DomainError, match="n must be >= 2"):
        fn(n)


def test_breakdown_invariants():
    for n in range(2, 51):
        bd = touchard_breakdown(n)
        assert bd.total == sum(t.term_value for t in bd.terms)
        assert [t.r for t in bd.terms] == list(range(n + 1))
        for t in bd.terms:
            assert t.sign == (1 if t.r % 2 == 0 else -1)
            assert t.term_value == t.sign * t.domino_count * t.tail_factorial
            assert t.tail_factorial == factorial(n - t.r)
            assert t.domino_count == domino_count(2 * n, t.r)
            assert t.term_value == touchard_term(n, t.r)
        signs = [t.sign for t in bd.terms]
        assert all(a == -b for a, b in zip(signs, signs[1:]))


def test_incremental_matches_direct_up_to_100():
    for n in range(2, 101):
        assert tait_count_incremental(n) == tait_count_direct(n), n


def test_recurrences_exact_up_to_200():
    """Step both recurrences by hand and confirm every division leaves no remainder."""
    for n in range(2, 201):
        m = 2 * n
        d = 1
        tail = factorial(n)
        for r in range(n):
            q, rem = divmod(d * (m - 2 * r) * (m - 2 * r - 1), (r + 1) * (m - r - 1))
            assert rem == 0, (n, r)
            d = q
            assert d == domino_count(m, r + 1)
            q, rem = divmod(tail, n - r)
            assert rem == 0
            tail = q


def test_tait_sequence_examples():
    assert list(tait_sequence(4)) == [(2, 0), (3, 1), (4, 2)]
    assert list(tait_sequence(2)) == [(2, 0)]
    seq = list(tait_sequence(10))
    assert seq[-1] == (10, tait_count_direct(10))
    assert seq[-1][1] > 0


def test_tait_sequence_validates_eagerly():
    with pytest.raises(DomainError):
        tait_sequence(1)


def test_tait_sequence_with_lower_bound():
    assert list(tait_sequence(6, 5)) == [(5, 13), (6, 80)]


def test_op_counts():
    ops = Counter()
    tait_count_incremental(50, ops)
    assert ops == {"mul": 150, "div": 50, "add": 50}
    ops = Counter()
    tait_count_direct(50, ops)
    assert ops["binomial"] == ops["factorial"] == 51


@settings(max_examples=25)
@given(st.integers(2, 300))
def test_menage_is_twice_factorial_times_tait(n):
    assert menage_count(n) == 2 * product_factorial(n) * tait_count_direct(n)


@given(st.integers(-(10**400), 10**400))
def test_decimal_round_trip(x):
    assert core.from_decimal(core.to_decimal(x)) == x
    assert core.to_decimal(x) == str(x)


def test_decimal_round_trip_large():
    x = tait_count(3000)
    s = core.to_decimal(x)
    assert len(s) > 5000
    assert core.from_decimal(s) == x
