import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rcgraph import (
    INFINITE,
    Graph,
    diameter,
    gnp_generate,
    vertex_connectivity_at_least,
)
from rcgraph.graphs import _diameter_matrix

from _oracles import (
    brute_diameter,
    brute_vertex_connectivity_at_least,
    complete_graph,
    cycle_graph,
    is_connected,
    path_graph,
)
from _strategies import graphs


class TestGraphType:
    def test_canonical_edge_order(self):
        g = Graph.from_edges(4, [(3, 2), (1, 0), (0, 2)])
        assert g.edges == ((0, 1), (0, 2), (2, 3))
        assert g.adj == ((1, 2), (0,), (0, 3), (2,))

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_rejects_single_vertex(self):
        with pytest.raises(ValueError):
            Graph.from_edges(1, [])

    def test_rejects_unsorted_edge_array(self):
        with pytest.raises(ValueError):
            Graph(3, np.array([[1, 2], [0, 1]], dtype=np.int32))

    def test_structural_equality_and_hash(self):
        a = Graph.from_edges(3, [(0, 1), (1, 2)])
        b = Graph.from_edges(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph.from_edges(3, [(0, 1)])

    def test_has_edge_and_degree(self):
        g = path_graph(4)
        assert g.has_edge(1, 0) and not g.has_edge(0, 2)
        assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]

    def test_is_complete(self):
        assert complete_graph(5).is_complete
        assert not path_graph(3).is_complete


class TestGnpGenerate:
    def test_p_one_gives_complete_graph(self):
        for seed in (0, 1, 99):
            assert gnp_generate(5, 1.0, seed) == complete_graph(5)

    def test_p_zero_gives_empty_graph(self):
        for seed in (0, 1, 99):
            assert gnp_generate(5, 0.0, seed).m == 0

    def test_deterministic_per_seed(self):
        assert gnp_generate(30, 0.3, 7) == gnp_generate(30, 0.3, 7)
        assert gnp_generate(30, 0.3, 7) != gnp_generate(30, 0.3, 8)

    def test_edge_count_within_five_sigma(self):
        # Binomial(499500, 1/2): mean 249750, sigma = sqrt(499500/4) ~ 353.4
        for seed in range(5):
            m = gnp_generate(1000, 0.5, seed).m
            assert abs(m - 249750) <= 1767

    @given(
        n=st.integers(2, 40),
        p1=st.floats(0, 1),
        p2=st.floats(0, 1),
        seed=st.integers(0, 2**64 - 1),
    )
    @settings(max_examples=60)
    def test_monotone_coupling(self, n, p1, p2, seed):
        lo, hi = min(p1, p2), max(p1, p2)
        g_lo = gnp_generate(n, lo, seed)
        g_hi = gnp_generate(n, hi, seed)
        assert g_lo.edge_set <= g_hi.edge_set

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            gnp_generate(1, 0.5, 0)
        with pytest.raises(ValueError):
            gnp_generate(5, -0.1, 0)
        with pytest.raises(ValueError):
            gnp_generate(5, 1.1, 0)


class TestDiameter:
    def test_complete_graph(self):
        assert diameter(complete_graph(4)) == 1

    def test_path_graph(self):
        assert diameter(path_graph(4)) == 3

    def test_disconnected_is_infinite(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert diameter(g) == INFINITE
        assert diameter(g) == math.inf

    @given(graphs(max_n=8))
    @settings(max_examples=100)
    def test_matches_bfs_oracle(self, g):
        assert diameter(g) == brute_diameter(g)

    @given(graphs(min_n=3, max_n=7))
    @settings(max_examples=100)
    def test_diameter_one_iff_complete(self, g):
        assert (diameter(g) == 1) == g.is_complete

    @pytest.mark.parametrize("p", [0.02, 0.05, 0.3, 0.9])
    def test_matrix_route_matches_oracle_on_large_graphs(self, p):
        g = gnp_generate(90, p, 5)
        assert _diameter_matrix(g) == brute_diameter(g)

    def test_matrix_route_long_path(self):
        # diameter far above the first doubling steps
        assert _diameter_matrix(path_graph(70)) == 69


class TestVertexConnectivity:
    def test_cycle_is_two_connected(self):
        assert vertex_connectivity_at_least(cycle_graph(4), 2)

    def test_path_middle_vertex_is_a_cut(self):
        assert not vertex_connectivity_at_least(path_graph(3), 2)

    def test_complete_graph_connectivity(self):
        g = complete_graph(5)
        assert vertex_connectivity_at_least(g, 4)
        for k in range(5, 8):
            assert not vertex_connectivity_at_least(g, k)

    def test_k2_on_two_vertices(self):
        g = complete_graph(2)
        assert vertex_connectivity_at_least(g, 1)
        assert not vertex_connectivity_at_least(g, 2)

    def test_rejects_nonpositive_k(self):
        with pytest.raises(ValueError):
            vertex_connectivity_at_least(complete_graph(3), 0)

    @given(graphs(max_n=6), st.integers(1, 5))
    @settings(max_examples=120, deadline=None)
    def test_matches_brute_oracle(self, g, k):
        assert vertex_connectivity_at_least(g, k) == brute_vertex_connectivity_at_least(g, k)

    @given(graphs(max_n=7))
    @settings(max_examples=80)
    def test_k1_iff_finite_diameter(self, g):
        assert vertex_connectivity_at_least(g, 1) == (diameter(g) != INFINITE)
        assert vertex_connectivity_at_least(g, 1) == is_connected(g)
