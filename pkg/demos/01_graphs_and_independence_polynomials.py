"""Graphs and their independence polynomials.

Build the three graph families, count independent sets, and look at
unimodality and modes of the resulting polynomials.

Run:  python demos/01_graphs_and_independence_polynomials.py
"""

from wlpgraph import (
    complete,
    custom,
    disjoint_union,
    independence_polynomial,
    independent_sets_of_size,
    lollipop,
    mode_analysis,
    mode_of_path,
    path,
)

# A path on 4 vertices has 1 empty set, 4 singletons, and 3 independent pairs:
p4 = path(4)
print("P_4 edges:", sorted(tuple(sorted(e)) for e in p4.edges))
print("I(P_4; t) =", independence_polynomial(p4))
print("pairs:", [sorted(s) for s in independent_sets_of_size(p4, 2)])
print()

# Complete graphs only ever admit singletons:
print("I(K_5; t) =", independence_polynomial(complete(5)))
print()

# The lollipop L_{4,9}: a 4-clique tied to a 9-vertex path by a bridge.
g = lollipop(4, 9)
poly = independence_polynomial(g)
print("L_{4,9} has", g.vertex_count, "vertices and", g.edge_count, "edges")
print("I(L_{4,9}; t) =", poly)
analysis = mode_analysis(poly)
print("unimodal:", analysis.is_unimodal, "   mode:", analysis.mode)
print()

# Disjoint unions multiply independence polynomials:
g1, g2 = path(3), complete(3)
lhs = independence_polynomial(disjoint_union(g1, g2))
rhs = independence_polynomial(g1) * independence_polynomial(g2)
print("I(P_3 + K_3) =", lhs)
print("product      =", rhs)
print()

# Modes of path polynomials grow slowly; consecutive modes differ by 0 or 1:
modes = [mode_of_path(n) for n in range(1, 21)]
print("path modes n=1..20:", modes)

# Ad-hoc graphs come from explicit edge lists:
square = custom(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("I(C_4; t) =", independence_polynomial(square))
