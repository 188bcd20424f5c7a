"""
Semigroups with many L-shapes
=============================

For odd n >= 5, S = <n, 3n-2, 3n-1, F(T)> with T = <n, 3n-2, 3n-1> has
(n+3)/2 L-shapes for its Apery set of F(T). The explicit construction and
the exhaustive search produce the same diagrams.
"""

from lshapes import enumerate_mdds
from lshapes.family import (
    build, classify_mi, construct_lshape_family, family_digraph, generic_lshapes,
    minimal_nf,
)

for n in (5, 7, 9, 11, 13, 15, 17):
    inst = build(n)
    built = construct_lshape_family(inst)
    same = [D.key for D in built] == [D.key for D in generic_lshapes(inst)]
    print(f"n={n:2d}  S={inst.S}  L-shapes={len(built)}  generic search agrees={same}")

# %%
# How many factorizations the Apery elements have, and the two minimal
# normal forms controlling each class.

inst = build(9)
for i, elems in classify_mi(inst).items():
    extra = f"  minimal normal forms {minimal_nf(inst, i)}" if i >= 2 else ""
    print(f"M_{i}: {len(elems)} elements{extra}")

# %%
# The same count on the digraph side.

for n in (5, 7, 17):
    G = family_digraph(build(n))
    print(G, len(enumerate_mdds(G)), "diagrams")

# %%
# The ten L-shapes of <17, 49, 50, 376>, told apart by the factorization
# each one uses for 2(3n-1) = 100 and for (n-2)(3n-2) = 735.

inst = build(17)
for D in construct_lshape_family(inst):
    print(D.point_of(inst.s_prime(2))[:3], D.point_of(inst.s(inst.half))[:3])
