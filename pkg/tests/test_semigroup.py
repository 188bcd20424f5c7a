from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from lshapes import DomainError, NumericalSemigroup
from lshapes.semigroup import apery, contains, frobenius, is_closed, pseudo_frobenius

S3 = NumericalSemigroup([5, 13, 14])
S4 = NumericalSemigroup([5, 13, 14, 22])
S23 = NumericalSemigroup([2, 3])


@pytest.mark.parametrize("x, expected", [(0, True), (22, False), (27, True), (-5, False)])
def test_contains(x, expected):
    assert contains(S3, x) is expected


def test_apery_values():
    assert apery(S3, 5) == (0, 26, 27, 13, 14)
    assert sorted(apery(S23, 2)) == [0, 3]
    ap = apery(S4, 22)
    assert len(ap) == 22 and max(ap) == 43


def test_apery_rejects_non_elements():
    with pytest.raises(DomainError):
        apery(S3, 22)
    with pytest.raises(DomainError):
        apery(S3, 0)


@pytest.mark.parametrize("gens, F", [([5, 13, 14], 22), ([2, 3], 1), ([17, 49, 50], 376), ([1], -1)])
def test_frobenius(gens, F):
    assert frobenius(NumericalSemigroup(gens)) == F


def test_pseudo_frobenius():
    assert pseudo_frobenius(S3) == {21, 22}
    assert pseudo_frobenius(S23) == {1}
    assert pseudo_frobenius(S4) == {9, 17, 21}


def test_closed_sets():
    assert is_closed(S4, apery(S4, 22))
    assert is_closed(S23, {0})
    assert not is_closed(S3, {0, 13, 27})
    with pytest.raises(DomainError):
        is_closed(S3, {0, 22})


@pytest.mark.parametrize("gens", [[5, 10, 3], [6, 9], [3, 3, 5], [3, 6], [0, 3], [4, 6, 10]])
def test_invalid_generators(gens):
    with pytest.raises(DomainError):
        NumericalSemigroup(gens)


def test_generators_are_sorted():
    assert NumericalSemigroup([14, 5, 13]).generators == (5, 13, 14)


semigroups = st.lists(st.integers(2, 30), min_size=2, max_size=4, unique=True).filter(
    lambda g: _valid(g)
)


def _valid(g):
    try:
        NumericalSemigroup(g)
        return True
    except DomainError:
        return False


@settings(max_examples=60, deadline=None)
@given(semigroups)
def test_membership_matches_brute_force(gens):
    S = NumericalSemigroup(gens)
    bound = S.frobenius() + S.multiplicity
    ref = oracles.members(S.generators, bound)
    assert all((x in S) == (x in ref) for x in range(bound + 1))


@settings(max_examples=60, deadline=None)
@given(semigroups)
def test_apery_invariants(gens):
    S = NumericalSemigroup(gens)
    F = S.frobenius()
    for m in S.generators:
        ap = S.apery(m)
        assert len(ap) == m and ap[0] == 0
        assert all(w % m == i and w - m not in S for i, w in enumerate(ap))
        assert max(ap) - m == F
        assert S.is_closed(ap)
    assert F in S.pseudo_frobenius()


def test_is_closed_matches_definition():
    # the full definition: a in C, b in S, a - b in S  =>  b in C
    S = S3
    elems = [s for s in range(60) if s in S]
    for r in range(1, 4):
        for C in combinations(elems[:8], r):
            C = set(C) | {0}
            full = all(b in C for a in C for b in elems if b <= a and a - b in S)
            assert S.is_closed(C) == full
