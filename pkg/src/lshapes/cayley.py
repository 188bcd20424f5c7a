"""Weighted Cayley digraphs on the cyclic group Z_N.

A digraph ``C(N; s_1..s_k; p_1..p_k)`` has the residues mod N as vertices and
an arc ``m -> m + s_i`` of weight ``p_i`` out of every vertex. Because the
graph is vertex-transitive, every metric question reduces to shortest
weights from vertex 0.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import DomainError


def residue_weights(modulus: int, steps, weights) -> list[int]:
    """Minimum path weight from 0 to every residue (label-setting sweep).

    Returns a list ``w`` with ``w[m]`` the distance from 0 to ``m``. Residues
    that cannot be reached keep the value ``None``.
    """
    dist = [None] * modulus
    dist[0] = 0
    heap = [(0, 0)]
    arcs = [(s % modulus, p) for s, p in zip(steps, weights)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for s, p in arcs:
            u = (v + s) % modulus
            nd = d + p
            if dist[u] is None or nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


@dataclass(frozen=True)
class MinWeightTable:
    """Per-class minimum weight plus every lattice point attaining it.

    ``candidates[m]`` is a sorted tuple of coordinate tuples ``x`` with
    ``sum(x_i s_i) = m (mod N)`` and ``sum(x_i p_i) = weights[m]``.
    """

    weights: tuple
    candidates: tuple

    def __len__(self):
        return len(self.weights)


@dataclass(frozen=True)
class WeightedCayleyDigraph:
    modulus: int
    steps: tuple
    weights: tuple = None

    def __post_init__(self):
        N = self.modulus
        if not isinstance(N, int) or N < 1:
            raise DomainError(f"modulus must be a positive integer, got {N!r}")
        steps = tuple(int(s) % N for s in self.steps)
        if self.weights is None:
            weights = (1,) * len(steps)
        else:
            weights = tuple(int(p) for p in self.weights)
        if len(weights) != len(steps):
            raise DomainError("steps and weights must have the same length")
        if not steps:
            raise DomainError("at least one step is required")
        if any(p < 1 for p in weights):
            raise DomainError(f"weights must be positive, got {weights}")
        if N > 1:
            if any(s == 0 for s in steps):
                raise DomainError(f"steps must be nonzero mod {N}")
            if len(set(steps)) != len(steps):
                raise DomainError(f"steps must be distinct mod {N}")
        g = N
        for s in steps:
            g = gcd(g, s)
        if g != 1:
            raise DomainError(f"gcd(N, steps) = {g}, expected 1")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "weights", weights)

    @property
    def k(self) -> int:
        return len(self.steps)

    @cached_property
    def distances_from_zero(self) -> tuple:
        return tuple(residue_weights(self.modulus, self.steps, self.weights))

    def label(self, x) -> int:
        return sum(a * s for a, s in zip(x, self.steps)) % self.modulus

    def weight(self, x) -> int:
        return sum(a * p for a, p in zip(x, self.weights))

    def distance(self, u: int, v: int) -> int:
        return self.distances_from_zero[(v - u) % self.modulus]

    def diameter(self) -> int:
        return max(self.distances_from_zero)

    @cached_property
    def _table(self) -> MinWeightTable:
        return _build_min_weight_table(self)

    def min_weight_table(self) -> MinWeightTable:
        return self._table

    def __str__(self):
        s = ",".join(map(str, self.steps))
        p = ",".join(map(str, self.weights))
        return f"C({self.modulus};{s};{p})"


def _build_min_weight_table(G: WeightedCayleyDigraph) -> MinWeightTable:
    # The minimum-weight points form an order ideal of N^k (any point below a
    # minimum-weight point is itself minimum-weight for its class), so a
    # search from the origin that only steps onto minimum-weight points
    # reaches every one of them.
    w = G.distances_from_zero
    N, k = G.modulus, G.k
    origin = (0,) * k
    seen = {origin: 0}
    stack = [origin]
    while stack:
        x = stack.pop()
        c = seen[x]
        wx = w[c]
        for i in range(k):
            y = x[:i] + (x[i] + 1,) + x[i + 1:]
            if y in seen:
                continue
            cy = (c + G.steps[i]) % N
            if wx + G.weights[i] == w[cy]:
                seen[y] = cy
                stack.append(y)
    buckets = [[] for _ in range(N)]
    for x, c in seen.items():
        buckets[c].append(x)
    return MinWeightTable(
        weights=tuple(w),
        candidates=tuple(tuple(sorted(b)) for b in buckets),
    )


def distance(G: WeightedCayleyDigraph, u: int, v: int) -> int:
    return G.distance(u, v)


def diameter(G: WeightedCayleyDigraph) -> int:
    return G.diameter()


def min_weight_table(G: WeightedCayleyDigraph) -> MinWeightTable:
    return G.min_weight_table()
