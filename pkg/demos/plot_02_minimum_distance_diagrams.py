"""
Minimum distance diagrams of circulant digraphs
===============================================

C(9; 4, 7; 1, 1) has two minimum distance diagrams. Changing the arc
weights to (2, 3) keeps only one of them.
"""

from lshapes import WeightedCayleyDigraph, enumerate_mdds, render

G = WeightedCayleyDigraph(9, (4, 7), (1, 1))
print(G, "diameter", G.diameter())

for D in enumerate_mdds(G):
    print(render(D))
    print()

Gw = WeightedCayleyDigraph(9, (4, 7), (2, 3))
(only,) = enumerate_mdds(Gw)
print(Gw, "has a single diagram:")
print(render(only))

# %%
# A degree-three example: C(56; 9, 17, 33) has 12 diagrams, each printed
# as a stack of slices along the third coordinate.

G2 = WeightedCayleyDigraph(56, (9, 17, 33))
mdds = enumerate_mdds(G2)
print(len(mdds), "diagrams; the first one:")
print(render(mdds[0]))

# with weights equal to the steps only two survive
print(len(enumerate_mdds(WeightedCayleyDigraph(56, (9, 17, 33), (9, 17, 33)))))
