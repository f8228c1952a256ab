"""Tensor products with a complete quadratic block, and block matrices.

Tensoring an algebra A with k[x_1..x_n]/(x_1..x_n)^2 produces an algebra B
whose multiplication matrices have a transparent block structure: inner
one-step matrices on the diagonal, identity blocks in the last column, the
next inner matrix in the corner.  The rank of the big matrix is therefore
decided by the inner one-step and two-step maps alone -- computed here both
ways and compared.

Run:  python demos/05_tensor_block_matrices.py
"""

from wlpgraph import (
    block_matrix,
    from_generators,
    from_graph,
    hilbert_series,
    path,
    tensor_failure_witness,
    tensor_with_squarefree_block,
    verdict_via_theorem,
)

# A tiny inner algebra: k[y]/(y^3), tensored with one quadratic variable.
inner = from_generators(1, [(3,)])
tb = tensor_with_squarefree_block(1, inner)
print("inner Hilbert series:", hilbert_series(inner))
print("tensor Hilbert series:", hilbert_series(tb.realized))
for i in range(inner.socle_degree + 1):
    gm = block_matrix(tb, i)
    print(f"block matrix at degree {i} (shape {gm.shape[0]}x{gm.shape[1]}):")
    for row in gm.matrix.to_dense():
        print("   ", row)
print()

# Predicted vs direct verdicts, degree by degree:
a9 = from_graph(path(9))
tb9 = tensor_with_squarefree_block(2, a9)
print("two quadratic variables over A(P_9):")
for i in range(a9.socle_degree + 1):
    rep = verdict_via_theorem(tb9, i)
    print(f"  degree {i}: direct rank {rep.direct_rank}, "
          f"predicted {rep.predicted.to_json_dict()}, agree: {rep.agree}")
print()

# Failure propagation: if two maps both fail surjectivity, so does the map
# one degree up in the tensor product of their algebras.
a8 = from_graph(path(8))
print("A(P_8) (x) A(P_8), combined map at degree 5 fails surjectivity:",
      tensor_failure_witness(a8, 2, a8, 2, "surjective"))
