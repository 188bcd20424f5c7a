"""Minimum distance diagrams and L-shapes.

Both objects are finite order ideals ``L`` of ``N^k`` together with a map
``x -> label(x)`` that is a bijection from ``L`` onto a label set: residues
mod N for a digraph, elements of a closed set for a semigroup. In both cases
the set ``P`` of admissible points (minimum-weight points, resp. all
factorizations of elements of the closed set) is itself an order ideal, and
every point strictly below ``x`` has strictly smaller weight. Visiting the
labels by nondecreasing weight therefore means that, when a label is reached,
everything below each of its candidates is already decided; a candidate is
usable exactly when its lower covers are the chosen representatives of their
labels.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .cayley import WeightedCayleyDigraph
from .errors import DomainError, UnsupportedRender
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class Diagram:
    """A finite downward-closed point set with one point per label.

    ``points`` is sorted lexicographically, ``labels[i]`` and ``weights[i]``
    belong to ``points[i]``. ``source`` records what the diagram is attached
    to, a :class:`WeightedCayleyDigraph` (kind ``"mdd"``) or a pair
    ``(NumericalSemigroup, closed set)`` (kind ``"lshape"``).
    """

    points: tuple
    labels: tuple
    weights: tuple
    kind: str = "mdd"
    source: object = field(default=None, compare=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.points[0])

    @property
    def key(self) -> tuple:
        return self.points

    def __len__(self):
        return len(self.points)

    def __contains__(self, x):
        return tuple(x) in self._index

    @property
    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = dict(zip(self.points, range(len(self.points))))
            object.__setattr__(self, "_idx", idx)
        return idx

    def label_of(self, x):
        return self.labels[self._index[tuple(x)]]

    def point_of(self, label):
        for p, l in zip(self.points, self.labels):
            if l == label:
                return p
        raise KeyError(label)

    def project(self, drop: int) -> tuple:
        """Sorted points with coordinate ``drop`` removed."""
        return tuple(sorted(p[:drop] + p[drop + 1:] for p in self.points))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        src = self.source
        if isinstance(src, WeightedCayleyDigraph):
            out["modulus"] = src.modulus
            out["steps"] = list(src.steps)
            out["weights"] = list(src.weights)
        elif src is not None:
            S, C = src
            out["closed_set"] = sorted(C)
            out["steps"] = list(S.generators)
            out["weights"] = list(S.generators)
        out["points"] = [
            {"coords": list(p), "class": c, "weight": w}
            for p, c, w in zip(self.points, self.labels, self.weights)
        ]
        return out


def _is_down_closed(pts) -> bool:
    for x in pts:
        for i, a in enumerate(x):
            if a and x[:i] + (a - 1,) + x[i + 1:] not in pts:
                return False
    return True


def is_face_connected(points) -> bool:
    pts = set(points)
    if not pts:
        return True
    start = next(iter(pts))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in range(len(x)):
            for d in (-1, 1):
                y = x[:i] + (x[i] + d,) + x[i + 1:]
                if y in pts and y not in seen:
                    seen.add(y)
                    queue.append(y)
    return len(seen) == len(pts)


# ---------------------------------------------------------------- search


def _search(labels, candidates, label_of):
    """Enumerate every choice of one candidate per label whose union is an
    order ideal.

    ``labels`` must be listed by nondecreasing weight, and the candidate sets
    must jointly form an order ideal whose lower covers always carry labels
    of strictly smaller weight.
    """
    chosen = {}
    order = list(labels)
    n = len(order)
    results = []

    def usable(x):
        for i, a in enumerate(x):
            if a:
                y = x[:i] + (a - 1,) + x[i + 1:]
                if chosen.get(label_of[y]) != y:
                    return False
        return True

    # iterative deepening over a stack of (position, remaining options)
    pos = 0
    stack = []
    while True:
        if pos == n:
            results.append(tuple(sorted(chosen.values())))
            options = []
        else:
            options = [x for x in candidates[order[pos]] if usable(x)]
        while not options:
            if not stack:
                return results
            pos, options = stack.pop()
            del chosen[order[pos]]
        x = options.pop()
        chosen[order[pos]] = x
        stack.append((pos, options))
        pos += 1


def _diagrams(found, label_of, weight_of, kind, source):
    out = []
    for pts in sorted(set(found)):
        out.append(Diagram(
            points=pts,
            labels=tuple(label_of[p] for p in pts),
            weights=tuple(weight_of(p) for p in pts),
            kind=kind,
            source=source,
        ))
    return out


def enumerate_mdds(G: WeightedCayleyDigraph) -> list:
    """All minimum distance diagrams of ``G``, sorted by their point lists.

    >>> len(enumerate_mdds(WeightedCayleyDigraph(9, (4, 7), (1, 1))))
    2
    """
    table = G.min_weight_table()
    label_of = {x: m for m, xs in enumerate(table.candidates) for x in xs}
    order = sorted(range(G.modulus), key=lambda m: (table.weights[m], m))
    found = _search(order, table.candidates, label_of)
    return _diagrams(found, label_of, G.weight, "mdd", G)


def closed_set_ideal(S: NumericalSemigroup, C) -> dict:
    """Map every factorization of every element of C to that element.

    The result is an order ideal of ``N^k`` because C is closed.
    """
    gens = S.generators
    k = len(gens)
    C = set(C)
    origin = (0,) * k
    seen = {origin: 0}
    stack = [origin]
    while stack:
        x = stack.pop()
        s = seen[x]
        for i in range(k):
            t = s + gens[i]
            if t in C:
                y = x[:i] + (x[i] + 1,) + x[i + 1:]
                if y not in seen:
                    seen[y] = t
                    stack.append(y)
    return seen


def lshapes_closed(S: NumericalSemigroup, C) -> list:
    """All L-shapes of the closed set C (which must contain 0)."""
    C = sorted(set(C))
    if not C or C[0] != 0:
        raise DomainError("closed set must contain 0")
    if not S.is_closed(C):
        raise DomainError("the given set is not closed")
    label_of = closed_set_ideal(S, C)
    candidates = {c: [] for c in C}
    for x, c in label_of.items():
        candidates[c].append(x)
    for c in C:
        candidates[c].sort()
    found = _search(C, candidates, label_of)
    gens = S.generators
    return _diagrams(
        found, label_of, lambda p: sum(a * g for a, g in zip(p, gens)),
        "lshape", (S, tuple(C)),
    )


def lshapes_apery(S: NumericalSemigroup, m: int) -> list:
    if m not in S.generators:
        raise DomainError(f"{m} is not a minimal generator of {S}")
    return lshapes_closed(S, S.apery(m))


def apery_digraph(S: NumericalSemigroup, m: int) -> WeightedCayleyDigraph:
    """``C(m; other generators; other generators)``."""
    others = tuple(g for g in S.generators if g != m)
    return WeightedCayleyDigraph(m, others, others)


# ---------------------------------------------------------- verification


def is_mdd(G: WeightedCayleyDigraph, D) -> bool:
    """Check the two diagram conditions directly; independent of the search."""
    points = [tuple(p) for p in (D.points if isinstance(D, Diagram) else D)]
    if any(len(p) != G.k for p in points):
        raise DomainError(f"diagram dimension does not match k={G.k}")
    if len(points) != G.modulus or len(set(points)) != len(points):
        return False
    if any(a < 0 for p in points for a in p):
        return False
    labels = {G.label(p) for p in points}
    if len(labels) != G.modulus:
        return False
    w = G.distances_from_zero
    if any(G.weight(p) != w[G.label(p)] for p in points):
        return False
    return _is_down_closed(set(points))


def is_lshape(S: NumericalSemigroup, C, D) -> bool:
    """Conditions (C1) bijection onto C and (C2) downward closure."""
    points = [tuple(p) for p in (D.points if isinstance(D, Diagram) else D)]
    gens = S.generators
    if any(len(p) != len(gens) for p in points):
        raise DomainError("diagram dimension does not match the embedding dimension")
    if any(a < 0 for p in points for a in p):
        return False
    values = sorted(sum(a * g for a, g in zip(p, gens)) for p in points)
    if values != sorted(set(C)) or len(set(points)) != len(points):
        return False
    return _is_down_closed(set(points))


# ---------------------------------------------------------------- render


def _grid(cells, width):
    """Rows from the largest second coordinate down."""
    if not cells:
        return []
    xs = max(x for x, _ in cells) + 1
    ys = max(y for _, y in cells) + 1
    rows = []
    for y in range(ys - 1, -1, -1):
        row = []
        for x in range(xs):
            v = cells.get((x, y))
            row.append(("." if v is None else str(v)).rjust(width))
        rows.append(" ".join(row).rstrip())
    return rows


def render(D: Diagram, fmt: str = "ascii") -> str:
    """Text rendering of a diagram.

    ``json`` works for every dimension. ``ascii`` draws one grid (first
    coordinate left to right, second bottom to top) for ``k <= 2`` and a
    stack of such grids, one per value of the third coordinate, for ``k == 3``.
    """
    if fmt == "json":
        return D.to_json()
    if fmt != "ascii":
        raise UnsupportedRender(f"unknown format {fmt!r}")
    k = D.k
    if k > 3:
        raise UnsupportedRender(f"ascii rendering needs k <= 3, got k={k}")
    width = max(len(str(l)) for l in D.labels)
    if k == 1:
        return " ".join(str(l).rjust(width) for _, l in sorted(zip(D.points, D.labels)))
    if k == 2:
        return "\n".join(_grid(dict(zip(D.points, D.labels)), width))
    blocks = []
    for z in range(max(p[2] for p in D.points) + 1):
        cells = {(p[0], p[1]): l for p, l in zip(D.points, D.labels) if p[2] == z}
        blocks.append(f"z={z}\n" + "\n".join(_grid(cells, width)))
    return "\n\n".join(blocks)
