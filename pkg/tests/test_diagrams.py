import json
import random

import pytest

import oracles
from lshapes import (
    DomainError, NumericalSemigroup, UnsupportedRender, WeightedCayleyDigraph as W,
    enumerate_mdds, is_lshape, is_mdd, lshapes_apery, lshapes_closed, render,
)
from lshapes.diagrams import Diagram, apery_digraph, is_face_connected

FIG1 = W(9, (4, 7), (1, 1))
FIG1_W = W(9, (4, 7), (2, 3))


def test_figure1_two_diagrams():
    ds = enumerate_mdds(FIG1)
    assert len(ds) == 2
    assert all(len(D) == 9 and is_mdd(FIG1, D) for D in ds)


def test_weights_2_3_keep_one_of_them():
    (only,) = enumerate_mdds(FIG1_W)
    assert only.key in {D.key for D in enumerate_mdds(FIG1)}
    other = next(D for D in enumerate_mdds(FIG1) if D.key != only.key)
    assert is_mdd(FIG1_W, only) and not is_mdd(FIG1_W, other)


def test_trivial_digraph():
    (D,) = enumerate_mdds(W(1, (1,)))
    assert D.points == ((0,),)
    assert is_mdd(W(1, (1,)), [(0,)])
    assert render(D) == "0"


def test_is_mdd_rejects_bad_sets():
    assert not is_mdd(FIG1, [(0, 0)])
    assert not is_mdd(FIG1, [(i, 0) for i in range(9)])
    with pytest.raises(DomainError):
        is_mdd(FIG1, [(0, 0, 0)])


@pytest.mark.parametrize("G", [
    FIG1, FIG1_W, W(10, (3, 7), (2, 5)), W(12, (5, 7)), W(11, (2, 3, 7)),
    W(16, (3, 5), (1, 1)), W(15, (2, 7, 11), (1, 2, 1)),
], ids=str)
def test_enumeration_matches_product_oracle(G):
    assert [D.key for D in enumerate_mdds(G)] == oracles.mdds(G.modulus, G.steps, G.weights)


def test_g2_counts():
    G2 = W(56, (9, 17, 33))
    ds = enumerate_mdds(G2)
    assert len(ds) == 12
    weighted = enumerate_mdds(W(56, (9, 17, 33), (9, 17, 33)))
    assert len(weighted) == 2
    assert {D.key for D in weighted} <= {D.key for D in ds}


def test_every_diagram_is_connected_and_verified():
    for G in (W(56, (9, 17, 33)), W(22, (5, 13, 14), (5, 13, 14)), FIG1):
        for D in enumerate_mdds(G):
            assert is_mdd(G, D)
            assert is_face_connected(D.points)


def test_deterministic_output():
    G = W(56, (9, 17, 33))
    assert [D.to_json() for D in enumerate_mdds(G)] == [D.to_json() for D in enumerate_mdds(G)]


def test_lshapes_closed_examples():
    S = NumericalSemigroup([17, 49, 50, 376])
    assert len(lshapes_closed(S, S.apery(376))) == 10
    S23 = NumericalSemigroup([2, 3])
    (L,) = lshapes_closed(S23, {0})
    assert L.points == ((0, 0),)
    S4 = NumericalSemigroup([5, 13, 14, 22])
    ls = lshapes_closed(S4, S4.apery(22))
    assert len(ls) == 4
    assert all(is_lshape(S4, S4.apery(22), L) for L in ls)


def test_lshapes_closed_rejects_open_set():
    S = NumericalSemigroup([5, 13, 14])
    with pytest.raises(DomainError):
        lshapes_closed(S, {0, 13, 27})


def test_lshapes_apery_projects_onto_mdds():
    S = NumericalSemigroup([5, 13, 14, 22])
    ls = lshapes_apery(S, 22)
    assert all(p[3] == 0 for L in ls for p in L.points)
    mdds = enumerate_mdds(apery_digraph(S, 22))
    assert sorted(L.project(3) for L in ls) == [D.key for D in mdds]
    for D in mdds:
        assert sorted(D.weights) == sorted(S.apery(22))


def test_lshapes_apery_rejects_non_generator():
    with pytest.raises(DomainError):
        lshapes_apery(NumericalSemigroup([5, 13, 14]), 10)


def test_one_dimensional_projection():
    S = NumericalSemigroup([2, 3])
    (L,) = lshapes_apery(S, 2)
    assert L.project(0) == ((0,), (1,))
    (L,) = lshapes_apery(S, 3)
    assert L.project(1) == ((0,), (1,), (2,))


def _random_dim3(rng, count, max_mult=40):
    out = []
    while len(out) < count:
        m = rng.randint(3, max_mult)
        a = rng.randint(m + 1, 4 * m)
        b = rng.randint(a + 1, 6 * m)
        try:
            out.append(NumericalSemigroup([m, a, b]))
        except DomainError:
            pass
    return out


def test_dimension_three_equivalence_and_bound():
    for S in _random_dim3(random.Random(7), 25):
        for m in S.generators:
            ls = lshapes_apery(S, m)
            assert 1 <= len(ls) <= 2
            i = S.generators.index(m)
            mdds = enumerate_mdds(apery_digraph(S, m))
            assert sorted(L.project(i) for L in ls) == [D.key for D in mdds]


def test_weight_restriction_never_adds_diagrams():
    from lshapes.family import sabariego_santos
    for t in (2, 4, 5):
        assert len(enumerate_mdds(sabariego_santos(t, weighted=True))) <= len(
            enumerate_mdds(sabariego_santos(t)))


def test_ascii_render_figure1():
    (D,) = enumerate_mdds(FIG1_W)
    text = render(D)
    rows = text.splitlines()
    assert len(rows) == 3
    cells = [c for r in rows for c in r.split() if c != "."]
    assert sorted(map(int, cells)) == list(range(9))


@pytest.mark.parametrize("i", range(12))
def test_ascii_render_three_dimensional(i):
    D = enumerate_mdds(W(56, (9, 17, 33)))[i]
    blocks = render(D).split("\n\n")
    assert len(blocks) == max(p[2] for p in D.points) + 1
    cells = [c for b in blocks for r in b.splitlines()[1:] for c in r.split() if c != "."]
    assert sorted(map(int, cells)) == list(range(56))


def test_render_k4_needs_json():
    L = lshapes_apery(NumericalSemigroup([5, 13, 14, 22]), 22)[0]
    with pytest.raises(UnsupportedRender):
        render(L, "ascii")
    doc = json.loads(render(L, "json"))
    assert doc["kind"] == "lshape" and len(doc["points"]) == 22


def test_json_schema():
    D = enumerate_mdds(FIG1)[0]
    doc = json.loads(D.to_json())
    assert set(doc) == {"kind", "modulus", "steps", "weights", "points"}
    assert doc["kind"] == "mdd" and doc["modulus"] == 9
    coords = [p["coords"] for p in doc["points"]]
    assert coords == sorted(coords)
    for p in doc["points"]:
        assert p["class"] == FIG1.label(p["coords"])
        assert p["weight"] == FIG1.weight(p["coords"])


def test_diagram_equality_ignores_source():
    a = Diagram(((0,),), (0,), (0,), "mdd", source=FIG1)
    b = Diagram(((0,),), (0,), (0,), "mdd", source=None)
    assert a == b
