import random
from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from approxconvex.extremal import eval_E_oracle
from approxconvex.kraft import (
    ExponentTuple,
    ExtremeTupleSet,
    _interior_certificate,
    candidate_tuples,
    enumerate_extreme,
    eta,
    is_feasible,
    is_minimal,
    kraft_weight,
    partition_tuple,
)
from approxconvex.numerics import SimplexPoint


def brute_weight(t, B):
    return sum(Fraction(1, B**m) for m in t)


def complete_binary_profiles(n):
    """Sorted length profiles of full binary trees with n + 1 leaves (weight exactly 1)."""
    return {
        t
        for t in product(range(1, n + 1), repeat=n + 1)
        if list(t) == sorted(t, reverse=True) and brute_weight(t, 2) == 1
    }


def brute_minimal(n, B, top):
    """Nonincreasing minimal feasible tuples with entries in [1, top]."""
    out = set()
    for t in product(range(1, top + 1), repeat=n + 1):
        if list(t) != sorted(t, reverse=True) or brute_weight(t, B) > 1:
            continue
        if all(
            brute_weight(t[:k] + (t[k] - 1,) + t[k + 1 :], B) > 1 for k in range(n + 1)
        ):
            out.add(t)
    return out


@pytest.mark.parametrize(
    "t, B, w",
    [((1, 1), 2, 1), ((2, 2, 1), 2, 1), ((3, 3, 2, 1), 2, 1), ((2, 2, 2), 2, Fraction(3, 4)), ((0, 2), 3, Fraction(10, 9))],
)
def test_kraft_weight(t, B, w):
    assert kraft_weight(ExponentTuple(t, B)) == w == brute_weight(t, B)


def test_is_feasible():
    assert is_feasible(ExponentTuple((2, 2, 2)), 1)
    assert not is_feasible(ExponentTuple((1, 1, 1)), 1)
    assert brute_weight((2, 2), 2) == Fraction(1, 2)
    assert is_feasible(ExponentTuple((2, 2)), Fraction(1, 2))
    with pytest.raises(ValueError):
        is_feasible(ExponentTuple((1,)), 0)


def test_is_minimal():
    assert is_minimal(ExponentTuple((2, 2, 1)), 1)
    assert not is_minimal(ExponentTuple((2, 2, 2)), 1)
    assert brute_weight((1, 2, 2), 2) == 1
    assert is_minimal(ExponentTuple((2, 2, 2, 2)), 1)
    with pytest.raises(ValueError):
        is_minimal(ExponentTuple((1, 1, 1)), 1)


def test_exponent_tuple_validation():
    with pytest.raises(ValueError):
        ExponentTuple((1, -1))
    with pytest.raises(ValueError):
        ExponentTuple((1, 1), base=1)
    assert ExponentTuple((1, 3, 2)).sorted_desc().entries == (3, 2, 1)


@given(st.lists(st.integers(1, 8), min_size=1, max_size=7), st.integers(2, 5), st.data())
def test_decrement_increases_weight(entries, B, data):
    k = data.draw(st.integers(0, len(entries) - 1))
    lower = list(entries)
    lower[k] -= 1
    assert kraft_weight(lower, B) > kraft_weight(entries, B)


def eta_oracle(n, C, B):
    return min(j for j in range(2, 200) if C * B**j >= n + B)


@pytest.mark.parametrize(
    "n, C, B, expected",
    [(2, 1, 2, 2), (5, 1, 2, 3), (0, 1, 2, 2), (7, Fraction(1, 8), 2, 7), (10, Fraction(2, 9), 3, 4)],
)
def test_eta(n, C, B, expected):
    assert eta(n, C, B) == expected == eta_oracle(n, C, B)


@given(st.integers(0, 30), st.fractions(min_value=Fraction(1, 1000), max_value=1), st.integers(2, 6))
def test_eta_matches_definition(n, C, B):
    assert eta(n, C, B) == eta_oracle(n, C, B)


def test_eta_rejects_nonpositive_budget():
    with pytest.raises(ValueError):
        eta(2, 0, 2)


@pytest.mark.parametrize("n, B", [(n, B) for B in (2, 3, 4) for n in range(1, 6)])
def test_candidates_are_all_minimal_tuples(n, B):
    # No minimal tuple on n+1 indices has an entry above n, so [1, n+1] is a safe box.
    assert set(candidate_tuples(n, B)) == brute_minimal(n, B, n + 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_binary_extreme_sets_are_complete_tree_profiles(n):
    # Every full-tree profile is the unique optimum at x(j) = 2**-m(j), so all are extreme.
    assert enumerate_extreme(n, 2).as_set() == complete_binary_profiles(n)


def test_small_binary_sets():
    assert enumerate_extreme(2, 2).as_set() == {(2, 2, 1)}
    assert enumerate_extreme(3, 2).as_set() == {(3, 3, 2, 1), (2, 2, 2, 2)}


def test_extreme_sets_contain_published_members():
    # The published lists for n = 4, 5 are subsets of the computed sets; the extra
    # members each beat every other profile at a concrete interior point.
    assert {(4, 4, 3, 2, 1), (3, 3, 2, 2, 2)} < enumerate_extreme(4, 2).as_set()
    assert {(5, 5, 4, 3, 2, 1), (3, 3, 3, 3, 2, 2)} < enumerate_extreme(5, 2).as_set()
    x = SimplexPoint([Fraction(1, 7)] * 4 + [Fraction(3, 7)])
    assert eval_E_oracle(x, 2) == Fraction(15, 7)
    assert sum(m * v for m, v in zip((3, 3, 3, 3, 1), x)) == Fraction(15, 7)
    assert sum(m * v for m, v in zip((3, 3, 2, 2, 2), x)) == Fraction(16, 7)
    assert sum(m * v for m, v in zip((4, 4, 3, 2, 1), x)) == Fraction(16, 7)


@pytest.mark.parametrize("n, B", [(n, B) for B in (2, 3, 4) for n in range(1, 6)])
def test_members_are_feasible_minimal_and_certified(n, B):
    ext = enumerate_extreme(n, B)
    assert len(ext.tuples) == len(ext.certificates) > 0
    for t, cert in zip(ext.tuples, ext.certificates):
        assert list(t) == sorted(t, reverse=True)
        assert is_feasible(ExponentTuple(t, B), 1)
        assert is_minimal(ExponentTuple(t, B), 1)
        x = SimplexPoint(cert)
        assert len(x.support) == n + 1
        assert sum(m * v for m, v in zip(t, x)) == eval_E_oracle(x, B)


@pytest.mark.parametrize("n, B", [(1, 3), (2, 3), (3, 4), (1, 2), (9, 10)])
def test_n_below_base_gives_all_ones(n, B):
    assert enumerate_extreme(n, B).as_set() == {(1,) * (n + 1)}


def test_orbit_minimum_matches_oracle():
    rng = random.Random(7)
    for n, B in [(2, 3), (3, 3), (4, 3), (3, 2), (4, 2)]:
        orbit = set()
        for t in enumerate_extreme(n, B):
            orbit |= set(permutations(t))
        for _ in range(60):
            d = rng.randint(n + 1, 50)
            cuts = sorted(rng.sample(range(1, d), n))
            x = [Fraction(b - a, d) for a, b in zip([0] + cuts, cuts + [d])]
            best = min(sum(m * v for m, v in zip(t, x)) for t in orbit)
            assert best == eval_E_oracle(SimplexPoint(x), B)


def test_dominated_candidate_is_rejected_by_lp():
    # (2,2,2) exceeds (2,2,1) by x(2) > 0 everywhere inside the simplex.
    assert _interior_certificate((2, 2, 2), [(2, 2, 1)], 2) is None
    # Against (3,2,0) the guess x ~ 2**-m loses (5/4 < 3/2), so only the LP can
    # accept; the constraint x(2) <= x(0) with ascending x forces the barycenter.
    cert = _interior_certificate((2, 2, 1), [(3, 2, 0)], 2)
    assert cert == (Fraction(1, 3),) * 3


def test_json_roundtrip_sorted_descending():
    ext = enumerate_extreme(4, 2)
    data = ext.to_dict()
    assert data == {"n": 4, "B": 2, "tuples": sorted(data["tuples"], reverse=True)}
    assert ExtremeTupleSet.from_json(ext.to_json()) == ExtremeTupleSet(4, 2, ext.tuples, ())


def brute_partition_exists(t, B):
    cap = Fraction(1, B)
    for labels in product(range(B), repeat=len(t)):
        loads = [Fraction(0)] * B
        for j, k in enumerate(labels):
            loads[k] += Fraction(1, B ** t[j])
        if all(l <= cap for l in loads):
            return True
    return False


def _check_partition(t, B, bins):
    assert len(bins) == B
    assert sorted(j for b in bins for j in b) == list(range(len(t)))
    for b in bins:
        assert sum((Fraction(1, B ** t[j]) for j in b), Fraction(0)) <= Fraction(1, B)


def test_partition_examples():
    assert partition_tuple(ExponentTuple((1, 1))) == [[0], [1]]
    assert brute_partition_exists((2, 2, 1), 2)
    assert partition_tuple(ExponentTuple((2, 2, 1))) == [[2], [0, 1]]
    bins = partition_tuple(ExponentTuple((2, 2, 2, 2)))
    assert sorted(len(b) for b in bins) == [2, 2]
    _check_partition((2, 2, 2, 2), 2, bins)


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        partition_tuple(ExponentTuple((0, 1)))
    with pytest.raises(ValueError):
        partition_tuple(ExponentTuple((1, 1, 1)))


@st.composite
def feasible_tuples(draw):
    B = draw(st.integers(2, 4))
    entries = draw(st.lists(st.integers(1, 6), min_size=1, max_size=10))
    if brute_weight(entries, B) > 1:
        # Deepen entries until the weight fits.
        entries = [m + 3 for m in entries]
    while brute_weight(entries, B) > 1:
        entries = [m + 1 for m in entries]
    return tuple(entries), B


@settings(max_examples=300)
@given(feasible_tuples())
def test_partition_property(tb):
    t, B = tb
    _check_partition(t, B, partition_tuple(ExponentTuple(t, B)))
