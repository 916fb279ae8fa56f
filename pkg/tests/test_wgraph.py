from fractions import Fraction

import numpy as np
import pytest

from entlap.corpus import build
from entlap.errors import NoEdges, NotAnEdge, VertexOutOfRange
from entlap.exact import Exact
from entlap.laplacian import laplacian_of_density
from entlap.matops import BipartiteDims, eigvals_sym
from entlap.states import validate
from entlap.wgraph import (
    WConvention,
    edge_w,
    export_dot,
    graph_from_laplacian,
    is_connected,
    max_w,
    vertex_weight,
)

from _oracles import bf_connected, bf_edge_w, bf_edges, bf_max_w, random_psd


def _graph_of(rho):
    return graph_from_laplacian(laplacian_of_density(rho))


def _random_density(rng, d1, d2):
    n = d1 * d2
    a = random_psd(rng, n)
    return validate(a / np.trace(a).real, BipartiteDims(d1, d2))


class TestGraphFromLaplacian:
    def test_rho2_edge_set(self, rho2):
        g = _graph_of(rho2)
        assert g.vertex_count == 8
        weight = Exact.of(Fraction(1, 81))
        assert set(g.edges) == {(0, 4, weight), (0, 7, weight), (3, 4, weight), (3, 7, weight)}

    def test_zero_laplacian_edgeless(self):
        rho = validate(np.diag([0.25] * 4), BipartiteDims(2, 2))
        assert _graph_of(rho).edges == ()

    def test_rho5_edge_set(self, rho5):
        g = _graph_of(rho5)
        weight = Exact.of(Fraction(1, 20))
        assert set(g.edges) == {(0, 1, weight), (0, 3, weight), (2, 3, weight)}

    def test_round_trip_reconstruction(self, rng):
        for _ in range(500):
            rho = _random_density(rng, 2, 2)
            lap = laplacian_of_density(rho)
            g = graph_from_laplacian(lap)
            rebuilt = np.zeros((4, 4))
            for i, j, w in g.edges:
                rebuilt[i, j] = rebuilt[j, i] = -float(w)
            np.fill_diagonal(rebuilt, -rebuilt.sum(axis=1))
            assert np.max(np.abs(rebuilt - lap.array)) <= 1e-12

    def test_total_degree_consistency(self, rho2, psi, rng):
        from entlap.laplacian import coherence_l1

        for rho in [rho2, psi] + [_random_density(rng, 2, 3) for _ in range(100)]:
            g = _graph_of(rho)
            total = sum(float(vertex_weight(g, i)) for i in range(g.vertex_count))
            assert total == pytest.approx(coherence_l1(rho), abs=1e-12)


class TestConnectivity:
    def test_rho2_disconnected(self, rho2):
        assert not is_connected(_graph_of(rho2))

    def test_rho3_connected(self, rho3):
        assert is_connected(_graph_of(rho3))

    def test_single_vertex(self):
        from entlap.wgraph import WeightedGraph

        assert is_connected(WeightedGraph(vertex_count=1, edges=()))

    def test_matches_bruteforce(self, rng):
        for _ in range(300):
            rho = _random_density(rng, 2, 2)
            # sparsify by zeroing some coherences
            m = rho.array.copy()
            mask = rng.random((4, 4)) < 0.5
            mask = mask & mask.T
            np.fill_diagonal(mask, False)
            m[mask] = 0.0
            rho2_ = validate(m / np.trace(m).real, BipartiteDims(2, 2), tol=1.0)
            g = _graph_of(rho2_)
            lap = laplacian_of_density(rho2_).array
            assert is_connected(g) == bf_connected(4, bf_edges(lap))


class TestVertexWeight:
    def test_isolated_vertex(self, rho2):
        g = _graph_of(rho2)
        assert vertex_weight(g, 1) == Exact.of(0)

    def test_rho3_vertex_zero(self, rho3):
        g = _graph_of(rho3)
        assert float(vertex_weight(g, 0)) == pytest.approx(0.4, abs=1e-15)

    def test_rho5_vertex_zero(self, rho5):
        g = _graph_of(rho5)
        assert vertex_weight(g, 0) == Exact.of(Fraction(1, 10))

    def test_equals_laplacian_diagonal(self, rho3):
        g = _graph_of(rho3)
        lap = laplacian_of_density(rho3)
        for i in range(4):
            assert float(vertex_weight(g, i)) == pytest.approx(lap.array[i, i], abs=1e-15)

    def test_out_of_range(self, rho3):
        with pytest.raises(VertexOutOfRange):
            vertex_weight(_graph_of(rho3), 4)


class TestEdgeW:
    def test_not_an_edge(self, rho5):
        with pytest.raises(NotAnEdge):
            edge_w(_graph_of(rho5), 0, 2)

    def test_path_graph_values(self, rho5):
        # path 2 - 1 - 4 - 3 (0-based 1-0-3-2), all weights 1/20:
        # endpoint edges carry w_i + w_j + one outside weight = 1/5,
        # the middle edge carries two outside weights = 3/10
        g = _graph_of(rho5)
        assert edge_w(g, 0, 1) == Exact.of(Fraction(1, 5))
        assert edge_w(g, 0, 3) == Exact.of(Fraction(3, 10))
        assert edge_w(g, 2, 3) == Exact.of(Fraction(1, 5))

    def test_isomorphic_edges_get_equal_values(self, rho5):
        # swapping 1<->4 and 2<->3 is a weight-preserving automorphism that
        # carries edge (1,2) to (3,4); any convention must match them
        g = _graph_of(rho5)
        for convention in WConvention:
            assert edge_w(g, 0, 1, convention) == edge_w(g, 2, 3, convention)

    def test_inclusive_adds_shared_edge_twice(self, rho5):
        g = _graph_of(rho5)
        for i, j, w in g.edges:
            assert edge_w(g, i, j, WConvention.INCLUSIVE) == edge_w(g, i, j) + w + w

    def test_matches_bruteforce_both_conventions(self, rng):
        for _ in range(200):
            rho = _random_density(rng, 2, 3)
            g = _graph_of(rho)
            lap = laplacian_of_density(rho).array
            edges = bf_edges(lap)
            for i, j, _ in g.edges:
                for convention, inclusive in [(WConvention.EXCLUDED, False), (WConvention.INCLUSIVE, True)]:
                    got = float(edge_w(g, i, j, convention))
                    want = bf_edge_w(6, edges, i, j, inclusive)
                    assert got == pytest.approx(want, abs=1e-12)


class TestMaxW:
    def test_no_edges(self):
        rho = validate(np.diag([0.25] * 4), BipartiteDims(2, 2))
        with pytest.raises(NoEdges):
            max_w(_graph_of(rho))

    def test_rho5(self, rho5):
        assert max_w(_graph_of(rho5)) == Exact.of(Fraction(3, 10))

    def test_rho3_both_conventions(self, rho3):
        # K4 with weights in tenths: endpoint-degree sums peak at 0.9 and the
        # common-neighbour terms add 0.1, so the default convention gives 1.0;
        # the inclusive convention additionally counts the shared edge twice
        g = _graph_of(rho3)
        assert float(max_w(g)) == pytest.approx(1.0, abs=1e-12)
        assert float(max_w(g, WConvention.INCLUSIVE)) == pytest.approx(1.4, abs=1e-12)

    def test_rho6_closed_form(self):
        for a in (0.01, 0.25, 1.0):
            rho = build("rho6", a)
            g = _graph_of(rho)
            n_const = 400 * a + 1
            assert float(max_w(g)) == pytest.approx((4 * a + 0.04) / n_const, abs=1e-12)

    def test_matches_bruteforce(self, rng):
        for _ in range(100):
            rho = _random_density(rng, 2, 2)
            g = _graph_of(rho)
            lap = laplacian_of_density(rho).array
            edges = bf_edges(lap)
            assert float(max_w(g)) == pytest.approx(bf_max_w(4, edges, False), abs=1e-12)
            assert float(max_w(g, WConvention.INCLUSIVE)) == pytest.approx(
                bf_max_w(4, edges, True), abs=1e-12)


class TestSpectralBound:
    def test_holds_with_inclusive_convention_on_random_states(self, rng):
        violations = 0
        checked = 0
        for _ in range(1000):
            d1, d2 = [(2, 2), (2, 3), (3, 3)][int(rng.integers(3))]
            rho = _random_density(rng, d1, d2)
            g = _graph_of(rho)
            if not g.edges or not is_connected(g):
                continue
            checked += 1
            lam_max = float(eigvals_sym(laplacian_of_density(rho).array)[-1])
            if lam_max > float(max_w(g, WConvention.INCLUSIVE)) / 2 + 1e-9:
                violations += 1
        assert checked >= 900
        assert violations == 0

    def test_exactly_tight_on_single_edge(self):
        # K2 with weight w: lambda_max(L) = 2w and W/2 = 2w under the
        # inclusive convention; the default convention gives only w, which is
        # why the bound is asserted with INCLUSIVE
        rho = validate(np.array([[0.5, 0.3, 0, 0], [0.3, 0.5, 0, 0],
                                 [0, 0, 0, 0], [0, 0, 0, 0]]), BipartiteDims(2, 2))
        lap = laplacian_of_density(rho)
        g = graph_from_laplacian(lap)
        lam_max = float(eigvals_sym(lap.array)[-1])
        assert lam_max == pytest.approx(0.6, abs=1e-12)
        assert float(max_w(g, WConvention.INCLUSIVE)) / 2 == pytest.approx(0.6, abs=1e-12)
        assert float(max_w(g)) / 2 == pytest.approx(0.3, abs=1e-12)

    def test_default_convention_violates_bound_on_corpus_paths(self, rho5, rho3):
        # measured counterexamples documenting why the property suite uses
        # the inclusive convention for the bound
        for rho, lam_max_expected, half_expected in [
            (rho5, (2 + np.sqrt(2)) / 20, 0.15),
            (rho3, 0.7, 0.5),
        ]:
            g = _graph_of(rho)
            lam_max = float(eigvals_sym(laplacian_of_density(rho).array)[-1])
            assert lam_max == pytest.approx(lam_max_expected, abs=1e-12)
            assert float(max_w(g)) / 2 == pytest.approx(half_expected, abs=1e-12)
            assert lam_max > float(max_w(g)) / 2
            assert lam_max <= float(max_w(g, WConvention.INCLUSIVE)) / 2 + 1e-9


class TestExportDot:
    def test_edgeless_two_vertices(self):
        from entlap.wgraph import WeightedGraph

        dot = export_dot(WeightedGraph(vertex_count=2, edges=()))
        assert dot == "graph G {\n  1;\n  2;\n}\n"

    def test_rho5_labels(self, rho5):
        dot = export_dot(_graph_of(rho5))
        assert dot.count('[label="1/20"]') == 3

    def test_rho2_labels(self, rho2):
        dot = export_dot(_graph_of(rho2))
        assert dot.count('[label="1/81"]') == 4
        assert "1 -- 5" in dot and "1 -- 8" in dot and "4 -- 5" in dot and "4 -- 8" in dot

    def test_byte_identical_across_runs(self, rho3):
        a = export_dot(_graph_of(rho3))
        b = export_dot(graph_from_laplacian(laplacian_of_density(build("rho3"))))
        assert a == b

    def test_float_weights_render_decimal(self, rng):
        rho = _random_density(rng, 2, 2)
        dot = export_dot(_graph_of(rho))
        assert "sqrt" not in dot and "/" not in dot.replace("--", "")
