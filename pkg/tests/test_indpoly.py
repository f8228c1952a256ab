import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wlpgraph import (
    IntPolynomial,
    ModeAnalysis,
    check_unimodal_sum,
    custom,
    disjoint_union,
    independence_polynomial,
    independent_sets_of_size,
    lollipop,
    mode_analysis,
    mode_of_path,
    path,
)
from wlpgraph.graphs import Graph

from conftest import independent_set_counts_brute, independent_sets_brute, random_graph

PATH_MODE_TABLE = [0, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 6]


class TestIntPolynomial:
    def test_trim_and_zero(self):
        assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPolynomial(()).is_zero
        assert IntPolynomial((0, 0)).is_zero
        assert IntPolynomial((1,)).degree == 0

    def test_arithmetic(self):
        f = IntPolynomial((1, 2))
        g = IntPolynomial((1, 1, 1))
        assert (f + g).coeffs == (2, 3, 1)
        assert (f * g).coeffs == (1, 3, 3, 2)
        assert f.shift().coeffs == (0, 1, 2)
        assert (f * IntPolynomial(())).is_zero

    def test_rendering(self):
        assert IntPolynomial((1, 13, 63)).to_text() == "1 + 13t + 63t^2"
        assert IntPolynomial((1, 0, 3)).to_text() == "1 + 3t^2"
        assert IntPolynomial((0, 1)).to_text() == "t"
        assert IntPolynomial(()).to_text() == "0"
        assert IntPolynomial((1, 2)).to_json() == ["1", "2"]


class TestIndependencePolynomial:
    def test_empty_graph(self):
        assert independence_polynomial(custom(0, [])).coeffs == (1,)

    def test_path4(self):
        assert independence_polynomial(path(4)).coeffs == (1, 4, 3)
        assert independence_polynomial(path(4)).coeffs == independent_set_counts_brute(path(4))

    def test_lollipop_4_9(self):
        assert independence_polynomial(lollipop(4, 9)).coeffs == (1, 13, 63, 140, 140, 51, 3)

    def test_brute_force_oracle(self, rng):
        for _ in range(60):
            g = random_graph(rng, max_vertices=10)
            assert independence_polynomial(g).coeffs == independent_set_counts_brute(g)

    def test_deletion_identity(self, rng):
        # I(G) = I(G - v) + t * I(G - N[v]) for every vertex of random graphs
        for _ in range(20):
            g = random_graph(rng, max_vertices=9)
            total = independence_polynomial(g)
            for v in range(g.vertex_count):
                keep = [u for u in range(g.vertex_count) if u != v]
                closed = g.adjacency[v] | {v}
                keep_closed = [u for u in range(g.vertex_count) if u not in closed]
                without = _induced(g, keep)
                reduced = _induced(g, keep_closed)
                lhs = total.coeffs
                rhs = (independence_polynomial(without)
                       + independence_polynomial(reduced).shift()).coeffs
                assert lhs == rhs

    def test_multiplicativity(self, rng):
        for _ in range(25):
            g1 = random_graph(rng, max_vertices=8)
            g2 = random_graph(rng, max_vertices=8)
            combined = independence_polynomial(disjoint_union(g1, g2))
            assert combined.coeffs == (
                independence_polynomial(g1) * independence_polynomial(g2)
            ).coeffs


def _induced(g: Graph, keep: list[int]) -> Graph:
    pos = {v: k for k, v in enumerate(keep)}
    edges = [
        (pos[u], pos[v])
        for e in g.edges
        for u, v in [sorted(e)]
        if u in pos and v in pos
    ]
    return custom(len(keep), edges)


class TestIndependentSets:
    def test_size_zero(self):
        assert independent_sets_of_size(path(5), 0) == [frozenset()]

    def test_path3_pairs(self):
        assert independent_sets_of_size(path(3), 2) == [frozenset({0, 2})]

    def test_lollipop_count(self):
        assert len(independent_sets_of_size(lollipop(4, 9), 3)) == 140

    def test_beyond_alpha_empty(self):
        assert independent_sets_of_size(complete_graph4(), 2) == []

    def test_order_and_counts(self, rng):
        for _ in range(20):
            g = random_graph(rng, max_vertices=9)
            poly = independence_polynomial(g).coeffs
            for k in range(len(poly)):
                sets = independent_sets_of_size(g, k)
                assert len(sets) == poly[k]
                assert sets == sorted(sets, key=lambda s: sorted(s))
                assert set(sets) == set(independent_sets_brute(g, k))


def complete_graph4():
    from wlpgraph import complete

    return complete(4)


class TestModeAnalysis:
    def test_examples(self):
        assert mode_analysis(IntPolynomial((1, 4, 3))) == ModeAnalysis(True, 1)
        res = mode_analysis(IntPolynomial((1, 1, 2, 1)))
        assert res.is_unimodal and res.mode == 2
        assert not mode_analysis(IntPolynomial((1, 3, 2, 3))).is_unimodal

    def test_plateau_mode_is_first_max(self):
        assert mode_analysis(IntPolynomial((1, 5, 5, 2))).mode == 1
        assert mode_analysis(IntPolynomial((1, 1))).mode == 0
        assert mode_analysis(IntPolynomial((2, 2, 1))).mode == 0

    def test_errors(self):
        with pytest.raises(ValueError):
            mode_analysis(IntPolynomial(()))
        with pytest.raises(ValueError):
            mode_analysis(IntPolynomial((1, -2, 1)))


def test_mode_of_path_table():
    assert [mode_of_path(n) for n in range(1, 21)] == PATH_MODE_TABLE


def test_path_mode_monotonicity():
    modes = [mode_of_path(n) for n in range(1, 31)]
    for a, b in zip(modes, modes[1:]):
        assert a <= b <= a + 1


def test_lollipop_mode_bound_spot():
    for m, n in [(3, 5), (5, 9), (7, 12), (10, 20)]:
        lam = mode_of_path(n)
        res = mode_analysis(independence_polynomial(lollipop(m, n)))
        assert res.is_unimodal and res.mode in (lam, lam + 1)


class TestUnimodalSum:
    def test_examples(self):
        res = check_unimodal_sum(IntPolynomial((1, 2)), IntPolynomial((1, 1, 1)))
        assert res.is_unimodal and res.mode == 1
        f = IntPolynomial((1, 3, 1))
        res = check_unimodal_sum(f, f)
        assert res.is_unimodal and res.mode == 1

    def test_mode_gap_rejected(self):
        with pytest.raises(ValueError):
            check_unimodal_sum(IntPolynomial((5, 1)), IntPolynomial((1, 1, 9)))

    def test_not_unimodal_rejected(self):
        with pytest.raises(ValueError):
            check_unimodal_sum(IntPolynomial((1, 3, 2, 3)), IntPolynomial((1,)))

    @given(
        mu=st.integers(0, 4),
        up=st.lists(st.integers(0, 9), min_size=0, max_size=4),
        down=st.lists(st.integers(0, 9), min_size=0, max_size=4),
        shift=st.integers(-1, 1),
        data=st.data(),
    )
    @settings(max_examples=80, deadline=None)
    def test_lemma_on_random_unimodal_pairs(self, mu, up, down, shift, data):
        f = _random_unimodal(mu, up, down)
        if f is None:
            return
        mf = mode_analysis(f)
        nu = mf.mode + shift
        if nu < 0:
            return
        up2 = data.draw(st.lists(st.integers(0, 9), max_size=4))
        down2 = data.draw(st.lists(st.integers(0, 9), max_size=4))
        g = _random_unimodal(nu, up2, down2)
        if g is None:
            return
        mg = mode_analysis(g)
        if abs(mf.mode - mg.mode) > 1:
            return
        res = check_unimodal_sum(f, g)
        assert res.is_unimodal
        assert res.mode in (min(mf.mode, mg.mode), min(mf.mode, mg.mode) + 1)


def _random_unimodal(mode_at: int, rises, falls):
    """Build a unimodal polynomial whose first maximum sits at ``mode_at``."""
    peak = 10 + sum(rises)
    coeffs = []
    level = peak
    rising = sorted(rises, reverse=True)
    for k in range(mode_at):
        level = peak - 1 - sum(rising[:mode_at - k - 1] or [0]) - (mode_at - k)
        coeffs.append(max(level, 0))
    coeffs.append(peak)
    level = peak
    for d in falls:
        level = max(level - d, 0)
        coeffs.append(level)
    poly = IntPolynomial(tuple(coeffs))
    if poly.is_zero:
        return None
    res = mode_analysis(poly)
    if not res.is_unimodal or res.mode != mode_at:
        return None
    return poly
