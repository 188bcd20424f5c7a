"""Second, solver-based count of minimum distance diagrams.

Minimum weights come from box enumeration and the diagram conditions are
clauses, so nothing is shared with the package's search.
"""
from itertools import combinations, product

import pytest

from lshapes import WeightedCayleyDigraph as W, enumerate_mdds
from lshapes.family import sabariego_santos

pycosat = pytest.importorskip("pycosat")


def sat_count(G):
    N, st, wt = G.modulus, G.steps, G.weights
    k = len(st)
    bound = 1
    while True:
        best = {}
        for x in product(range(bound + 1), repeat=k):
            c = sum(a * s for a, s in zip(x, st)) % N
            w = sum(a * p for a, p in zip(x, wt))
            best[c] = min(best.get(c, w), w)
        if len(best) == N and bound * min(wt) >= max(best.values()):
            break
        bound *= 2
    pts = [x for x in product(range(bound + 1), repeat=k)
           if sum(a * p for a, p in zip(x, wt)) == best[sum(a * s for a, s in zip(x, st)) % N]]
    var = {x: i + 1 for i, x in enumerate(pts)}
    by_class = {}
    for x in pts:
        by_class.setdefault(sum(a * s for a, s in zip(x, st)) % N, []).append(var[x])
    cnf = []
    for vs in by_class.values():
        cnf.append(vs)
        cnf.extend([-a, -b] for a, b in combinations(vs, 2))
    for x in pts:
        for i in range(k):
            if x[i]:
                y = x[:i] + (x[i] - 1,) + x[i + 1:]
                cnf.append([-var[x], var[y]] if y in var else [-var[x]])
    return sum(1 for _ in pycosat.itersolve(cnf))


@pytest.mark.parametrize("G", [
    W(9, (4, 7)), W(9, (4, 7), (2, 3)), W(22, (5, 13, 14), (5, 13, 14)),
    sabariego_santos(2), sabariego_santos(2, weighted=True),
    sabariego_santos(4), sabariego_santos(4, weighted=True),
    sabariego_santos(5),
], ids=str)
def test_search_agrees_with_sat_model_count(G):
    assert len(enumerate_mdds(G)) == sat_count(G)
