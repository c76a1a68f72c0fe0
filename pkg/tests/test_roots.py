import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_positive, closed_under_sums, regular_subsets
from utdiagram.roots import (
    IdealError,
    RegularIdeal,
    Root,
    closure,
    enumerate_regular_ideals,
    is_regular,
    order_key,
    positive_roots,
    root_sum,
    succ,
)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((7, 4), (4, 1), (7, 1)),
        ((3, 2), (2, 1), (3, 1)),
        ((5, 2), (4, 1), None),
    ],
)
def test_root_sum(a, b, expected):
    assert root_sum(Root(*a), Root(*b)) == expected


def test_root_basics():
    r = Root(5, 2)
    assert r.positive and not (-r).positive
    assert -r == (2, 5)


def test_order_extremes_and_display():
    roots = positive_roots(5)
    assert roots[0] == (5, 1)
    assert roots[-1] == (5, 4)
    # column-major, rows descending
    assert roots[:5] == [(5, 1), (4, 1), (3, 1), (2, 1), (5, 2)]
    assert sorted(roots, key=order_key, reverse=True) == roots


def test_order_is_strict_total():
    roots = positive_roots(6)
    for a in roots:
        assert not succ(a, a)
        for b in roots:
            if a != b:
                assert succ(a, b) != succ(b, a)


@pytest.mark.parametrize(
    "m_set, n, expected",
    [
        ({(5, 1), (6, 1), (7, 1), (7, 2)}, 7, True),
        ({(6, 2)}, 7, False),
        (set(), 7, True),
        (set(), 1, True),
    ],
)
def test_is_regular(m_set, n, expected):
    assert is_regular(m_set, n) is expected


def test_is_regular_rejects_out_of_range():
    with pytest.raises(IdealError):
        is_regular({(8, 1)}, 7)
    with pytest.raises(IdealError):
        is_regular({(1, 2)}, 7)


def test_closure_examples():
    assert closure({(5, 1)}, 7).roots == {(5, 1), (6, 1), (7, 1)}
    assert closure(set(), 4).roots == set()
    assert closure({(4, 3)}, 5).roots == {(4, 3), (5, 3), (4, 2), (5, 2), (4, 1), (5, 1)}


def test_strict_validation_names_missing_sum():
    with pytest.raises(IdealError, match=r"\(7,2\)"):
        RegularIdeal.from_roots(7, [(6, 2)])
    fixed = RegularIdeal.from_roots(7, [(6, 2)], close=True)
    assert {(7, 2), (6, 1), (7, 1)} <= fixed.roots


def test_thresholds_validation():
    with pytest.raises(IdealError):
        RegularIdeal(4, (5, 3, 5))
    with pytest.raises(IdealError):
        RegularIdeal(4, (2, 2, 5))
    ideal = RegularIdeal(4, (3, 4, 5))
    assert ideal.roots == {(3, 1), (4, 1), (4, 2)}
    assert (4, 2) in ideal and (3, 2) not in ideal
    assert ideal.dim == 3


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)])
def test_enumeration_counts(n, count):
    ideals = list(enumerate_regular_ideals(n))
    assert len(ideals) == count == len(set(ideals))
    # Catalan numbers
    assert count == math.comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    brute = set(regular_subsets(n))
    assert {i.roots for i in enumerate_regular_ideals(n)} == brute


def test_n3_ideals_explicit():
    expected = {
        frozenset(),
        frozenset({(3, 1)}),
        frozenset({(3, 1), (3, 2)}),
        frozenset({(3, 1), (2, 1)}),
        frozenset({(3, 1), (2, 1), (3, 2)}),
    }
    assert {i.roots for i in enumerate_regular_ideals(3)} == expected


@st.composite
def subsets(draw):
    n = draw(st.integers(1, 6))
    roots = all_positive(n)
    chosen = draw(st.sets(st.sampled_from(roots)) if roots else st.just(set()))
    return n, set(chosen)


@given(subsets())
@settings(max_examples=300, deadline=None)
def test_regular_iff_staircase(case):
    n, s = case
    mins = [min((i for i, j in s if j == c), default=n + 1) for c in range(1, n)]
    staircase = {(i, j) for (i, j) in all_positive(n) if i >= mins[j - 1]}
    monotone = all(a <= b for a, b in zip(mins, mins[1:]))
    assert is_regular(s, n) == (s == staircase and monotone)
    assert is_regular(s, n) == closed_under_sums(s, n)


@given(subsets(), subsets())
@settings(max_examples=200, deadline=None)
def test_closure_properties(c1, c2):
    n, s = c1
    cl = closure(s, n).roots
    assert s <= cl
    assert closure(cl, n).roots == cl
    assert (cl == s) == is_regular(s, n)
    _, t = c2
    t = {r for r in t if r[0] <= n}
    assert closure(s & t, n).roots <= cl
