"""Factorizations of semigroup elements and minimal presentations.

A factorization of ``s`` in ``<n_1, ..., n_k>`` is a tuple ``x`` of
nonnegative integers with ``sum(x_i * n_i) == s``. A minimal presentation is
read off from the elements whose factorizations split into several classes
when two factorizations are linked whenever their supports meet.
"""
from __future__ import annotations

from .errors import DomainError
from .semigroup import NumericalSemigroup


def _factorizations(gens, s):
    k = len(gens)
    out = []
    x = [0] * k

    def rec(i, rest):
        g = gens[i]
        if i == k - 1:
            if rest % g == 0:
                x[i] = rest // g
                out.append(tuple(x))
            return
        for a in range(rest // g, -1, -1):
            x[i] = a
            rec(i + 1, rest - a * g)
        x[i] = 0

    rec(0, s)
    return out


def factorizations(S: NumericalSemigroup, s: int) -> list:
    """All factorizations of ``s``, sorted lexicographically.

    >>> factorizations(NumericalSemigroup([5, 13, 14]), 28)
    [(0, 0, 2), (3, 1, 0)]
    """
    if s < 0:
        raise DomainError(f"cannot factor a negative integer ({s})")
    if s not in S:
        return []
    return sorted(_factorizations(S.generators, s))


def shares_support(x, y) -> bool:
    return any(a and b for a, b in zip(x, y))


def _components(points):
    """Connected components of the support-overlap graph, each sorted, in
    order of their smallest member."""
    parent = list(range(len(points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if shares_support(points[i], points[j]):
                parent[find(i)] = find(j)
    groups = {}
    for i, p in enumerate(points):
        groups.setdefault(find(i), []).append(p)
    return sorted(sorted(g) for g in groups.values())


class FactorizationGraph:
    """Graph on ``Z(s)`` with an edge between factorizations of common support."""

    def __init__(self, S: NumericalSemigroup, s: int):
        if s not in S:
            raise DomainError(f"{s} is not an element of {S}")
        self.element = s
        self.vertices = factorizations(S, s)
        self.edges = [
            (x, y)
            for i, x in enumerate(self.vertices)
            for y in self.vertices[i + 1:]
            if shares_support(x, y)
        ]

    def components(self):
        return _components(self.vertices)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def factorization_graph(S: NumericalSemigroup, s: int) -> FactorizationGraph:
    return FactorizationGraph(S, s)


def normalize_pair(a, b):
    """Cancel the common part of ``a`` and ``b`` and order the pair."""
    common = [min(u, v) for u, v in zip(a, b)]
    a = tuple(u - c for u, c in zip(a, common))
    b = tuple(v - c for v, c in zip(b, common))
    return (a, b) if a <= b else (b, a)


def betti_elements(S: NumericalSemigroup) -> list:
    gens = S.generators
    bound = S.frobenius() + gens[0] + gens[-1]
    out = []
    for s in range(1, bound + 1):
        if s in S and len(_components(_factorizations(gens, s))) > 1:
            out.append(s)
    return out


def minimal_presentation(S: NumericalSemigroup) -> set:
    """A minimal presentation as a set of normalized pairs.

    For each Betti element the component holding the lexicographically
    smallest factorization is the base; the smallest factorization of every
    other component is paired with the base representative.

    >>> sorted(minimal_presentation(NumericalSemigroup([2, 3])))
    [((0, 2), (3, 0))]
    """
    pairs = set()
    for s in betti_elements(S):
        comps = _components(_factorizations(S.generators, s))
        base = comps[0][0]
        for comp in comps[1:]:
            pairs.add(normalize_pair(base, comp[0]))
    return pairs
