"""Tensor products with a complete quadratic block, and their block matrices.

B is the inner algebra A tensored with k[x_1..x_n]/(x_1..x_n)^2.  Its graded
basis is imposed block by block: for 1 <= i <= D the degree-i basis is
x_1 * (degree i-1 basis of A), ..., x_n * (degree i-1 basis of A), then the
degree-i basis of A itself.  With that ordering the matrix of multiplication
by the all-ones form literally shows the block layout: copies of the inner
one-step matrix on the diagonal, identity blocks in the last column block,
and the next inner matrix in the corner.

The rank of the big matrix then matches a prediction computed purely from
the inner algebra: for interior degrees the map is injective (surjective)
exactly when both the one-step and the two-step inner maps are; the bottom
map is always injective and the top map has maximal rank exactly when the
last inner one-step map is surjective.  Both sides of that equivalence are
computed independently here; tests assert they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    GradedMap,
    LinearForm,
    MonomialAlgebra,
    Monomial,
    monomial_divides,
    multiplication_map,
)


class TensorAlgebra:
    """B = k[x_1..x_n]/(x)^2 tensor A, with the block basis ordering."""

    def __init__(self, n: int, inner: MonomialAlgebra):
        if n < 1:
            raise ValueError("n must be positive")
        if inner.socle_degree < 1:
            raise ValueError("inner algebra must have positive socle degree")
        self.n = n
        self.inner = inner
        self.realized = _realize(n, inner)

    def __repr__(self):
        return f"TensorAlgebra(n={self.n}, inner={self.inner!r})"


def _embed(m: Monomial, n: int) -> Monomial:
    return (0,) * n + tuple(m)


def _with_x(j: int, m: Monomial, n: int) -> Monomial:
    out = [0] * n + list(m)
    out[j] = 1
    return tuple(out)


def _realize(n: int, inner: MonomialAlgebra) -> MonomialAlgebra:
    num_vars = n + inner.num_vars
    gens = [
        tuple((1 if v in (a, b) else 0) if a != b else (2 if v == a else 0)
              for v in range(num_vars))
        for a in range(n) for b in range(a, n)
    ]
    gens.extend(_embed(g, n) for g in inner.generators)
    d_top = inner.socle_degree
    bases: list[list[Monomial]] = [[(0,) * num_vars]]
    for i in range(1, d_top + 1):
        level: list[Monomial] = []
        for j in range(n):
            level.extend(_with_x(j, m, n) for m in inner.basis(i - 1))
        level.extend(_embed(m, n) for m in inner.basis(i))
        bases.append(level)
    bases.append([_with_x(j, m, n) for j in range(n) for m in inner.basis(d_top)])
    for level in bases:
        for m in level:
            assert not any(monomial_divides(g, m) for g in gens)
    labels = tuple(f"x{j + 1}" for j in range(n)) + tuple(inner.var_labels)
    return MonomialAlgebra(num_vars, gens, bases=bases, var_labels=labels)


def tensor_with_squarefree_block(n: int, a: MonomialAlgebra) -> TensorAlgebra:
    """Tensor a with the complete quadratic algebra on n new variables."""
    return TensorAlgebra(n, a)


def block_matrix(tb: TensorAlgebra, i: int) -> GradedMap:
    """Matrix of the all-ones multiplication [B]_i -> [B]_{i+1} in the block bases."""
    if not 0 <= i <= tb.inner.socle_degree:
        raise ValueError(f"degree {i} outside 0..{tb.inner.socle_degree}")
    return multiplication_map(
        tb.realized, LinearForm.all_ones(tb.realized.num_vars), i, 1
    )


@dataclass(frozen=True)
class Verdict:
    injective: bool | None
    surjective: bool | None
    maximal_rank: bool | None

    def to_json_dict(self) -> dict:
        return {
            "injective": self.injective,
            "surjective": self.surjective,
            "maximal_rank": self.maximal_rank,
        }


@dataclass(frozen=True)
class BlockMatrixReport:
    degree: int
    predicted: Verdict
    direct: Verdict
    direct_rank: int

    @property
    def agree(self) -> bool:
        for name in ("injective", "surjective", "maximal_rank"):
            want = getattr(self.predicted, name)
            got = getattr(self.direct, name)
            if want is not None and want != got:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "predicted": self.predicted.to_json_dict(),
            "direct": self.direct.to_json_dict(),
            "agree": self.agree,
        }


def _map_flags(a: MonomialAlgebra, ell: LinearForm, i: int, t: int) -> tuple[bool, bool]:
    """(injective, surjective) of ell^t from degree i, with zero-space conventions."""
    h_src = a.dim(i)
    h_tgt = a.dim(i + t)
    if h_src == 0:
        return True, h_tgt == 0
    if h_tgt == 0:
        return False, True
    rank = multiplication_map(a, ell, i, t).rank
    return rank == h_src, rank == h_tgt


def verdict_via_theorem(tb: TensorAlgebra, i: int) -> BlockMatrixReport:
    """Predicted verdict from the inner ranks next to the directly computed one."""
    inner = tb.inner
    d_top = inner.socle_degree
    if not 0 <= i <= d_top:
        raise ValueError(f"degree {i} outside 0..{d_top}")
    ell = LinearForm.all_ones(inner.num_vars)
    if i == 0:
        predicted = Verdict(injective=True, surjective=None, maximal_rank=None)
    elif i == d_top:
        # top rank is h_D + (n-1) * rank(ell at D-1): for n = 1 the identity
        # block alone already spans every row, so the map is always surjective
        inj1, surj1 = _map_flags(inner, ell, d_top - 1, 1)
        predicted = Verdict(
            injective=None, surjective=None, maximal_rank=surj1 or tb.n == 1
        )
    else:
        inj1, surj1 = _map_flags(inner, ell, i - 1, 1)
        inj2, surj2 = _map_flags(inner, ell, i - 1, 2)
        # The block reduction gives rank = h_i + (n-1)*rank(ell) + rank(ell^2),
        # so with a single extra variable the one-step factor drops out of the
        # surjectivity side entirely; the injectivity side is unaffected since
        # an injective two-step map forces an injective first step.
        pred_inj = inj1 and inj2
        pred_surj = (surj1 or tb.n == 1) and surj2
        predicted = Verdict(
            injective=pred_inj,
            surjective=pred_surj,
            maximal_rank=pred_inj or pred_surj,
        )
    gm = block_matrix(tb, i)
    h_src = tb.realized.dim(i)
    h_tgt = tb.realized.dim(i + 1)
    rank = gm.rank
    direct = Verdict(
        injective=rank == h_src,
        surjective=rank == h_tgt,
        maximal_rank=rank == min(h_src, h_tgt),
    )
    return BlockMatrixReport(i, predicted, direct, rank)


def _tensor_product(a1: MonomialAlgebra, a2: MonomialAlgebra) -> MonomialAlgebra:
    from .algebra import from_generators

    n1 = a1.num_vars
    gens = [tuple(g) + (0,) * a2.num_vars for g in a1.generators]
    gens.extend((0,) * n1 + tuple(g) for g in a2.generators)
    labels = tuple(f"a_{lbl}" for lbl in a1.var_labels) + tuple(
        f"b_{lbl}" for lbl in a2.var_labels
    )
    return from_generators(n1 + a2.num_vars, gens, var_labels=labels)


def tensor_failure_witness(
    a1: MonomialAlgebra, i: int, a2: MonomialAlgebra, j: int, mode: str
) -> bool:
    """Check that a failure of ``mode`` propagates to the tensor product.

    Both all-ones maps (degree i -> i+1 on a1, degree j -> j+1 on a2) must
    fail the given mode; the combined all-ones map on a1 (x) a2 is then
    computed at degree i+j+1 (surjective mode) or i+j (injective mode) and
    True is returned exactly when it fails the mode too -- which is forced:
    a product of two non-surjective (non-injective) maps stays deficient one
    degree up in the tensor product.
    """
    if mode not in ("injective", "surjective"):
        raise ValueError("mode must be 'injective' or 'surjective'")
    flags1 = _map_flags(a1, LinearForm.all_ones(a1.num_vars), i, 1)
    flags2 = _map_flags(a2, LinearForm.all_ones(a2.num_vars), j, 1)
    pick = 0 if mode == "injective" else 1
    if flags1[pick]:
        raise ValueError(f"the first map (degree {i}) does not fail {mode}")
    if flags2[pick]:
        raise ValueError(f"the second map (degree {j}) does not fail {mode}")
    combined = _tensor_product(a1, a2)
    degree = i + j + 1 if mode == "surjective" else i + j
    inj, surj = _map_flags(combined, LinearForm.all_ones(combined.num_vars), degree, 1)
    return not (surj if mode == "surjective" else inj)
