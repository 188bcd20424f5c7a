"""
Invariants of a numerical semigroup
===================================

Membership, Apery sets, Frobenius and pseudo-Frobenius numbers, and
factorizations, on T = <5, 13, 14> and S = <5, 13, 14, 22>.
"""

from lshapes import NumericalSemigroup, factorizations, minimal_presentation

T = NumericalSemigroup([5, 13, 14])
print("T =", T)

# membership is a lookup in the Apery set of the multiplicity
print("22 in T:", 22 in T, "  27 in T:", 27 in T)
print("Ap(T, 5) by residue:", T.apery(5))
print("F(T) =", T.frobenius(), "  PF(T) =", sorted(T.pseudo_frobenius()))

# adding the Frobenius number as a generator lowers the Frobenius number by one
S = NumericalSemigroup([5, 13, 14, 22])
print("F(S) =", S.frobenius(), "  PF(S) =", sorted(S.pseudo_frobenius()))

# Apery sets are closed under the semigroup order
ap = S.apery(22)
print("max Ap(S, 22) =", max(ap), "  closed:", S.is_closed(ap))

# every factorization of 28 and 39
for s in (28, 39):
    print(f"Z({s}) =", factorizations(T, s))

# the Betti elements give a minimal presentation
for a, b in sorted(minimal_presentation(T)):
    print("  ", a, "~", b)
