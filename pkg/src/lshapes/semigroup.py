"""Numerical semigroups: membership, Apery sets, Frobenius and pseudo-Frobenius
numbers, and closed subsets under the order ``a <=_S b  iff  b - a in S``.
"""
from __future__ import annotations

from functools import cached_property, lru_cache
from math import gcd

from .cayley import residue_weights
from .errors import DomainError


def _spanned_upto(gens, bound):
    """Boolean sieve of the monoid spanned by ``gens`` on ``0..bound``."""
    reach = bytearray(bound + 1)
    reach[0] = 1
    for g in gens:
        for v in range(g, bound + 1):
            if reach[v - g]:
                reach[v] = 1
    return reach


class NumericalSemigroup:
    """A numerical semigroup given by its minimal system of generators.

    Generators are sorted on construction. A generator list that is not
    coprime, contains duplicates, or is not minimal raises ``DomainError``;
    nothing is silently repaired, since the embedding dimension (and hence
    the coordinate system of every factorization) depends on the exact list.

    >>> S = NumericalSemigroup([5, 13, 14])
    >>> S.frobenius()
    22
    >>> 27 in S, 22 in S
    (True, False)
    """

    def __init__(self, generators):
        gens = [int(g) for g in generators]
        if not gens:
            raise DomainError("at least one generator is required")
        if any(g <= 0 for g in gens):
            raise DomainError(f"generators must be positive, got {gens}")
        if len(set(gens)) != len(gens):
            raise DomainError(f"duplicate generators in {gens}")
        gens.sort()
        g = 0
        for a in gens:
            g = gcd(g, a)
        if g != 1:
            raise DomainError(f"generators {gens} have gcd {g}")
        for i, a in enumerate(gens):
            # only smaller generators can contribute to a
            if i and _spanned_upto(gens[:i], a)[a]:
                raise DomainError(
                    f"generator {a} is a combination of {gens[:i]}; "
                    "the generator list is not minimal"
                )
        self._gens = tuple(gens)

    @property
    def generators(self) -> tuple:
        return self._gens

    @property
    def embedding_dimension(self) -> int:
        return len(self._gens)

    k = embedding_dimension

    @property
    def multiplicity(self) -> int:
        return self._gens[0]

    def __repr__(self):
        return f"NumericalSemigroup({list(self._gens)})"

    def __str__(self):
        return "<" + ", ".join(map(str, self._gens)) + ">"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self._gens == other._gens

    def __hash__(self):
        return hash(self._gens)

    @cached_property
    def _mult_apery(self) -> tuple:
        return self.apery(self.multiplicity)

    def __contains__(self, x) -> bool:
        if x < 0:
            return False
        m = self.multiplicity
        return x >= self._mult_apery[x % m]

    contains = __contains__

    def apery(self, m: int) -> tuple:
        """``(w_0, ..., w_{m-1})`` with ``w_i`` the least element of S congruent to i mod m."""
        return _apery(self, m)

    def frobenius(self) -> int:
        m = self.multiplicity
        return max(self._mult_apery) - m

    def gaps(self) -> list:
        return [x for x in range(1, self.frobenius() + 1) if x not in self]

    def pseudo_frobenius(self) -> set:
        # z + s in S for every nonzero s in S reduces to z + g in S for every
        # generator g
        return {z for z in self.gaps() if all(z + g in self for g in self._gens)}

    def is_closed(self, C) -> bool:
        """Whether the finite set ``C`` of elements of S is closed under ``<=_S``.

        ``b <=_S a`` decomposes into a chain of single-generator steps, so it
        suffices that ``a - g`` lies in C whenever it lies in S.
        """
        C = set(C)
        for a in C:
            if a not in self:
                raise DomainError(f"{a} is not an element of {self}")
        for a in C:
            for g in self._gens:
                if a - g in self and a - g not in C:
                    return False
        return True


@lru_cache(maxsize=256)
def _apery(S: NumericalSemigroup, m: int) -> tuple:
    if m <= 0 or (m != S.multiplicity and m not in S):
        raise DomainError(f"{m} is not a nonzero element of {S}")
    gens = S.generators
    w = residue_weights(m, gens, gens)
    return tuple(w)


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


def apery(S: NumericalSemigroup, m: int) -> tuple:
    return S.apery(m)


def frobenius(S: NumericalSemigroup) -> int:
    return S.frobenius()


def pseudo_frobenius(S: NumericalSemigroup) -> set:
    return S.pseudo_frobenius()


def is_closed(S: NumericalSemigroup, C) -> bool:
    return S.is_closed(C)
