"""Multiplication maps as exact integer matrices, and their ranks.

Multiplying by the sum of the variables sends each basis monomial of degree
i to a 0/1 combination of degree i+1 monomials.  Whether these maps have
maximal rank is a question about exact ranks over the rationals, computed
here with integer arithmetic only: fraction-free elimination for small
matrices, certified modular elimination with exact null-vector witnesses for
large ones.

Run:  python demos/03_multiplication_maps_and_exact_ranks.py
"""

from wlpgraph import (
    LinearForm,
    exact_rank,
    from_graph,
    lollipop,
    multiplication_map,
    path,
    rank_bareiss,
    rank_modular,
)
from wlpgraph.ranks import exact_rank_info

# The first map of A(P_2): 1 goes to x_1 + x_2.
a = from_graph(path(2))
gm = multiplication_map(a, LinearForm.all_ones(2), 0, 1)
print("A(P_2), degree 0 -> 1:", gm.matrix.to_dense(), "rank", gm.rank)
print()

# Squaring the form is composition of two one-step maps:
b = from_graph(path(5))
gm2 = multiplication_map(b, LinearForm.all_ones(5), 0, 2)
print("A(P_5), multiplication by the squared form, 0 -> 2:")
for row in gm2.matrix.to_dense():
    print("  ", row)
print("rank:", gm2.rank)
print()

# The degree 3 -> 4 map of A(L_{4,9}) is square (140 x 140) but singular;
# that drop of rank is exactly why this algebra fails the WLP.
big = from_graph(lollipop(4, 9))
gm3 = multiplication_map(big, LinearForm.all_ones(13), 3, 1)
info = exact_rank_info(gm3.matrix)
print("A(L_{4,9}), degree 3 -> 4: shape", gm3.shape)
print("rank:", info.rank, f"(method: {info.method}, certified: {info.certified})")
print()

# Two independent engines agree on ranks; that is a standing test invariant.
m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
print("toy matrix rank:", exact_rank(m),
      "| bareiss:", rank_bareiss(m),
      "| modular (3 primes > 2^30):", rank_modular(m))
