"""Artinian monomial algebras and their Hilbert series.

The algebra of a graph kills every variable square and every edge product,
so its degree-d monomials are exactly the d-element independent sets, and
the Hilbert series equals the independence polynomial.

Run:  python demos/02_monomial_algebras_and_hilbert_series.py
"""

from wlpgraph import (
    NotArtinianError,
    from_generators,
    from_graph,
    hilbert_series,
    independence_polynomial,
    lollipop,
    parse_generators,
    path,
)

a = from_graph(lollipop(3, 4))
print("A(L_{3,4}):", a)
print("variables:", " ".join(a.var_labels))
print("Hilbert series:", hilbert_series(a))
print("independence polynomial:", independence_polynomial(lollipop(3, 4)))
print()

# The degree-2 basis, rendered as monomials:
def show(mono):
    return " ".join(
        lbl if e == 1 else f"{lbl}^{e}"
        for lbl, e in zip(a.var_labels, mono) if e
    )

print("degree-2 basis of A(L_{3,4}):")
print("  " + ", ".join(show(m) for m in a.basis(2)))
print()

# General monomial quotients work too, as long as the ideal is Artinian
# (a pure power of every variable must appear):
b = from_generators(2, [(3, 0), (0, 2), (1, 1)])  # y1^3, y2^2, y1 y2
print("k[y1,y2]/(y1^3, y2^2, y1 y2):", hilbert_series(b))

try:
    from_generators(2, [(2, 0)])
except NotArtinianError as exc:
    print("missing pure power detected:", exc)
print()

# The same algebras can come from the one-monomial-per-line text format:
text = """
# squares plus one edge
y1^2
y2^2
y1 y2
"""
num_vars, gens, labels = parse_generators(text)
c = from_generators(num_vars, gens, var_labels=labels)
print("from text:", hilbert_series(c), "=", "I(K_2; t)")
