"""Parametric families with many minimum distance diagrams.

``build(n)`` gives, for odd ``n >= 5``, the semigroups ``T = <n, 3n-2, 3n-1>``
and ``S = <n, 3n-2, 3n-1, F(T)>``; the Apery set of ``F(T)`` in ``S`` has
exactly ``(n+3)/2`` L-shapes. ``sabariego_santos(t)`` gives the degree-three
circulant digraphs with ``m = 2 + t + t^2`` and ``N = m(m-1)``.

Every closed form here is recomputed generically and compared;
disagreement raises :class:`VerificationError`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cayley import WeightedCayleyDigraph
from .diagrams import Diagram, enumerate_mdds, is_lshape, lshapes_closed
from .errors import DomainError, VerificationError
from .factorization import factorizations, minimal_presentation, normalize_pair
from .semigroup import NumericalSemigroup


def _check(cond, msg):
    if not cond:
        raise VerificationError(msg)


def frobenius_formula(n: int) -> int:
    return (3 * n - 7) * n // 2 + 2


@dataclass(frozen=True, eq=False)
class FamilyInstance:
    n: int
    T: NumericalSemigroup
    frobT: int
    S: NumericalSemigroup

    @cached_property
    def apery(self) -> tuple:
        """``Ap(S, F(T))`` indexed by residue mod F(T)."""
        return self.S.apery(self.frobT)

    @cached_property
    def apery_elements(self) -> tuple:
        return tuple(sorted(self.apery))

    @cached_property
    def _apery_set(self) -> frozenset:
        return frozenset(self.apery)

    @cached_property
    def T_factorizations(self) -> dict:
        """Factorizations over ``(n, 3n-2, 3n-1)`` of each Apery element."""
        return {s: factorizations(self.T, s) for s in self.apery_elements}

    @property
    def half(self) -> int:
        """Largest index i with M_i nonempty, ``(n-1)/2``."""
        return (self.n - 1) // 2

    def s(self, i: int) -> int:
        n = self.n
        return (3 * n - 5) // 2 * n + (i - 2) * (3 * n - 2) + 3 * n - 1

    def s_prime(self, i: int) -> int:
        n = self.n
        return 3 * (i - 1) * n + (i - 1) * (3 * n - 2)


def build(n: int) -> FamilyInstance:
    if not isinstance(n, int) or n < 5 or n % 2 == 0:
        raise DomainError(f"the family needs an odd integer n >= 5, got {n!r}")
    T = NumericalSemigroup([n, 3 * n - 2, 3 * n - 1])
    F = frobenius_formula(n)
    _check(T.frobenius() == F, f"F(T) = {T.frobenius()} but the closed form gives {F}")
    _check(T.pseudo_frobenius() == {F - 1, F}, f"PF(T) = {T.pseudo_frobenius()}")
    S = NumericalSemigroup([n, 3 * n - 2, 3 * n - 1, F])
    _check(S.frobenius() == F - 1, f"F(S) = {S.frobenius()}, expected {F - 1}")
    inst = FamilyInstance(n, T, F, S)
    _check(len(inst.apery) == F, "Apery set has the wrong size")
    _check(max(inst.apery) == 2 * F - 1 == n * (3 * n - 7) + 3,
           f"max Ap(S, F(T)) = {max(inst.apery)}")
    return inst


# ------------------------------------------------------------ normal forms


def nf_bounds_ok(inst: FamilyInstance, x) -> bool:
    n = inst.n
    return x[2] < 2 and x[1] < (n + 1) // 2 and x[0] < (3 * n - 1) // 2


def normal_form(inst: FamilyInstance, s: int) -> tuple:
    """The unique factorization ``(x, y, z)`` of an Apery element with
    ``z < 2``, ``y < (n+1)/2`` and ``x < (3n-1)/2``."""
    if s not in inst._apery_set:
        raise DomainError(f"{s} is not in Ap(S, {inst.frobT})")
    hits = [x for x in inst.T_factorizations[s] if nf_bounds_ok(inst, x)]
    _check(len(hits) == 1, f"{s} has {len(hits)} bounded factorizations")
    return hits[0]


def explicit_region(n: int) -> set:
    """The union of the four boxes F_1..F_4."""
    a, b = (3 * n - 3) // 2, (3 * n - 5) // 2
    F = {(x, y, 0) for x in range(a + 1) for y in range((n - 3) // 2 + 1)}
    F |= {(x, (n - 1) // 2, 0) for x in range(2)}
    F |= {(x, y, 1) for x in range(a + 1) for y in range((n - 7) // 2 + 1)}
    F |= {(x, (n - 5) // 2, 1) for x in range(b + 1)}
    return F


def f_region(inst: FamilyInstance) -> set:
    F = explicit_region(inst.n)
    images = {normal_form(inst, s) for s in inst.apery_elements}
    _check(images == F, "normal forms do not fill the explicit region")
    _check(len(F) == inst.frobT == (3 * inst.n ** 2 - 7 * inst.n) // 2 + 2,
           f"|F| = {len(F)}")
    return F


# ------------------------------------------------------ factorization counts


def single_factorization_rule(n: int, nf) -> bool:
    """Normal forms of the Apery elements with exactly one factorization."""
    x, y, z = nf
    return (
        (y == 0 and z == 0 and x <= (3 * n - 3) // 2)
        or (y == 0 and z == 1 and x <= (3 * n - 7) // 2)
        or (x == 2 and z == 0 and 1 <= y <= (n - 3) // 2)
        or (x <= 1 and z == 0 and 1 <= y <= (n - 1) // 2)
        or (x <= 2 and z == 1 and 1 <= y <= (n - 5) // 2)
    )


def multi_factorization_rule(n: int, i: int, nf) -> bool:
    """Normal forms of the Apery elements with exactly ``i >= 2`` factorizations."""
    x, y, z = nf
    lo = 3 * (i - 1)
    return (
        (y == i - 2 and z == 1 and (3 * n - 5) // 2 <= x <= (3 * n - 3) // 2)
        or (y == i - 1 and z == 0 and lo <= x <= (3 * n - 3) // 2)
        or (y == i - 1 and z == 1 and lo <= x <= (3 * n - 7) // 2)
        or (i <= y <= (n - 3) // 2 and z == 0 and lo <= x <= 3 * i - 1)
        or (i <= y <= (n - 5) // 2 and z == 1 and lo <= x <= 3 * i - 1)
    )


def classify_mi(inst: FamilyInstance) -> dict:
    """``{i: sorted elements of Ap(S, F(T)) with exactly i factorizations}``.

    The brute-force counts are checked against the normal-form rules for
    every ``i``; the rule for ``i >= 2`` is also applied at ``i = (n-1)/2``,
    restricted to the region F.
    """
    n = inst.n
    M = {}
    for s in inst.apery_elements:
        M.setdefault(len(inst.T_factorizations[s]), []).append(s)
    F = explicit_region(n)
    for i in range(1, inst.half + 1):
        if i == 1:
            rule = {s for s in inst.apery_elements
                    if single_factorization_rule(n, normal_form(inst, s))}
        else:
            rule = {s for s in inst.apery_elements
                    if multi_factorization_rule(n, i, normal_form(inst, s))}
            _check(all(normal_form(inst, s) in F for s in rule), "rule leaves F")
        _check(rule == set(M.get(i, ())), f"M_{i} disagrees with the normal-form rule")
    _check(max(M) <= inst.half, f"M_{max(M)} is nonempty")
    return dict(sorted(M.items()))


def _minimal(points):
    return {p for p in points
            if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in points)}


def minimal_nf(inst: FamilyInstance, i: int) -> tuple:
    """The two minimal normal forms in ``nf(M_i)``, ``2 <= i <= (n-1)/2``."""
    n = inst.n
    if not 2 <= i <= inst.half:
        raise DomainError(f"i must lie in 2..{inst.half}, got {i}")
    pair = (((3 * n - 5) // 2, i - 2, 1), (3 * (i - 1), i - 1, 0))
    members = [normal_form(inst, s) for s in inst.apery_elements
               if len(inst.T_factorizations[s]) == i]
    _check(_minimal(members) == set(pair), f"minimal normal forms of M_{i} differ")
    _check(normal_form(inst, inst.s(i)) == pair[0], f"nf(s_{i}) mismatch")
    _check(normal_form(inst, inst.s_prime(i)) == pair[1], f"nf(s'_{i}) mismatch")
    return pair


# ------------------------------------------------------------- presentation


def presentation_formula(n: int) -> set:
    return {
        normalize_pair((0, 0, 2), (3, 1, 0)),
        normalize_pair((0, (n + 1) // 2, 0), ((3 * n - 5) // 2, 0, 1)),
        normalize_pair(((3 * n + 1) // 2, 0, 0), (0, (n - 1) // 2, 1)),
    }


def verify_presentation(inst: FamilyInstance) -> set:
    mp = minimal_presentation(inst.T)
    _check(mp == presentation_formula(inst.n), f"minimal presentation {mp}")
    return mp


# ------------------------------------------------------------ L-shapes


def lshape_choices(inst: FamilyInstance) -> list:
    """The explicit choice sequences, as dicts ``element -> factorization``.

    Keys are the elements ``s_i`` and ``s'_i`` for ``2 <= i <= (n-1)/2``;
    the result lists case (a) twice, case (b) once and case (c) for
    ``j = 0 .. (n-5)/2``.
    """
    n, h = inst.n, inst.half
    idx = range(2, h + 1)
    b = (3 * n - 5) // 2

    def column(i):
        return (0, (n - 3) // 2 + i, 0)

    def corner(i):
        return (b, i - 2, 1)

    def chain(i):
        return (b - 3 * (i - 2), 0, 2 * (i - 2) + 1)

    def stacked(i):
        return (0, 0, 2 * (i - 1))

    def staircase(i):
        return (3 * (i - 1), i - 1, 0)

    choices = []
    for sp in (stacked, staircase):
        choices.append(("a", {**{inst.s(i): column(i) for i in idx},
                              **{inst.s_prime(i): sp(i) for i in idx}}))
    choices.append(("b", {**{inst.s(i): corner(i) for i in idx},
                          **{inst.s_prime(i): staircase(i) for i in idx}}))
    for j in range((n - 5) // 2 + 1):
        choices.append((f"c{j}", {
            **{inst.s(i): chain(i) if i >= h - j else column(i) for i in idx},
            **{inst.s_prime(i): stacked(i) for i in idx},
        }))
    return choices


def _complete(inst: FamilyInstance, chosen: dict) -> dict:
    # An element of M_i whose normal form lies above that of a chosen
    # minimal element m must use chosen[m] shifted by the difference.
    mins = {}
    for m, f in chosen.items():
        mins.setdefault(len(inst.T_factorizations[m]), []).append((normal_form(inst, m), f))
    out = {}
    for s in inst.apery_elements:
        Z = inst.T_factorizations[s]
        if len(Z) == 1:
            out[s] = Z[0]
            continue
        nf = normal_form(inst, s)
        picks = set()
        for mnf, f in mins.get(len(Z), ()):
            d = tuple(a - b for a, b in zip(nf, mnf))
            if min(d) >= 0:
                picks.add(tuple(a + b for a, b in zip(f, d)))
        _check(len(picks) == 1, f"element {s} has completions {picks}")
        out[s] = picks.pop()
    return out


def construct_lshape_family(inst: FamilyInstance) -> list:
    """The ``(n+3)/2`` explicit L-shapes of ``Ap(S, F(T))``, each verified."""
    C = inst.apery_elements
    gens = inst.S.generators
    diagrams = []
    for _, chosen in lshape_choices(inst):
        fact = _complete(inst, chosen)
        rows = sorted((f + (0,), s) for s, f in fact.items())
        D = Diagram(
            points=tuple(p for p, _ in rows),
            labels=tuple(s for _, s in rows),
            weights=tuple(sum(a * g for a, g in zip(p, gens)) for p, _ in rows),
            kind="lshape",
            source=(inst.S, C),
        )
        _check(is_lshape(inst.S, C, D), "constructed diagram is not an L-shape")
        diagrams.append(D)
    keys = {D.key for D in diagrams}
    _check(len(keys) == len(diagrams) == (inst.n + 3) // 2, "constructed L-shapes collide")
    return sorted(diagrams, key=lambda D: D.key)


def generic_lshapes(inst: FamilyInstance) -> list:
    return lshapes_closed(inst.S, inst.apery_elements)


# ------------------------------------------------------------- digraphs


def sabariego_santos(t: int, weighted: bool = False) -> WeightedCayleyDigraph:
    if not isinstance(t, int) or t < 1 or t % 3 == 0:
        raise DomainError(f"t must be a positive integer not divisible by 3, got {t!r}")
    m = 2 + t + t * t
    steps = (1 + m, 1 + m * t, 1 + m * t * t)
    return WeightedCayleyDigraph(m * (m - 1), steps, steps if weighted else None)


def family_digraph(inst: FamilyInstance) -> WeightedCayleyDigraph:
    g = inst.T.generators
    return WeightedCayleyDigraph(inst.frobT, g, g)


def pf_formula(n: int) -> set:
    return {
        (3 * n * n - 9 * n + 4) // 2,
        (3 * n * n - 7 * n + 2) // 2,
        (3 * n * n - 13 * n + 8) // 2,
    }


def pf_family(inst: FamilyInstance) -> set:
    pf = pf_formula(inst.n)
    brute = inst.S.pseudo_frobenius()
    _check(pf == brute, f"PF(S) = {sorted(brute)} but the closed form gives {sorted(pf)}")
    return pf


# ------------------------------------------------------------- table 1


TABLE1_T = (2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20)
DEFAULT_MAX_T = 5


def table1_rows(max_t: int = DEFAULT_MAX_T):
    """Yield ``(t, N, unweighted count, weighted count)`` for t up to max_t."""
    for t in TABLE1_T:
        if t > max_t:
            break
        G = sabariego_santos(t)
        Gw = sabariego_santos(t, weighted=True)
        yield t, G.modulus, len(enumerate_mdds(G)), len(enumerate_mdds(Gw))


def verify_all(inst: FamilyInstance) -> dict:
    """Run every check for one family instance; returns a summary dict."""
    n = inst.n
    F = f_region(inst)
    M = classify_mi(inst)
    for i in range(1, inst.half + 1):
        want = 6 * n - 13 if i == 1 else 6 * n - 12 * i - 1
        _check(len(M[i]) == want, f"|M_{i}| = {len(M[i])}, expected {want}")
    _check(sum(len(v) for v in M.values()) == inst.frobT, "sum of |M_i| != F(T)")
    mins = {i: minimal_nf(inst, i) for i in range(2, inst.half + 1)}
    verify_presentation(inst)
    pf = pf_family(inst)
    built = construct_lshape_family(inst)
    generic = generic_lshapes(inst)
    _check({D.key for D in built} == {D.key for D in generic},
           "explicit and generic L-shapes differ")
    return {
        "n": n,
        "T": list(inst.T.generators),
        "S": list(inst.S.generators),
        "frobenius_T": inst.frobT,
        "frobenius_S": inst.S.frobenius(),
        "pseudo_frobenius_S": sorted(pf),
        "region_size": len(F),
        "mi_sizes": {i: len(v) for i, v in M.items()},
        "minimal_nf": {i: [list(a), list(b)] for i, (a, b) in mins.items()},
        "lshapes": len(built),
    }
