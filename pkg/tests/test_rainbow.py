import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rcgraph import (
    EXCEEDS,
    INFINITE,
    BudgetExceeded,
    EdgeColoring,
    Graph,
    PathPacking,
    diameter,
    enumerate_rainbow_paths,
    gnp_generate,
    is_rainbow_k_connected,
    max_disjoint_rainbow_paths,
    rc_k_exact,
    validate_path_packing,
)
from rcgraph.construct import rainbow_color_random
from rcgraph.rainbow import _verify_matrix, _verify_pairs

from _oracles import (
    all_colorings,
    all_labeled_graphs,
    brute_max_disjoint_rainbow,
    brute_rainbow_paths,
    complete_graph,
    connected_labeled_graphs,
    cycle_graph,
    labeled_trees,
    path_graph,
)
from _strategies import colored_graphs


def triangle_coloring(colors):
    g = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    by_edge = dict(zip(((0, 1), (0, 2), (1, 2)), colors))
    return g, EdgeColoring.from_assignment(g, max(colors), [by_edge[e] for e in g.edges])


class TestEdgeColoring:
    def test_rejects_wrong_length(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            EdgeColoring.from_assignment(g, 2, [1])

    def test_rejects_out_of_range_colors(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            EdgeColoring.from_assignment(g, 2, [1, 3])
        with pytest.raises(ValueError):
            EdgeColoring.from_assignment(g, 2, [0, 1])

    def test_color_lookup_is_symmetric(self):
        g = path_graph(3)
        col = EdgeColoring.from_assignment(g, 2, [1, 2])
        assert col.color_of(0, 1) == col.color_of(1, 0) == 1
        assert col.color_of(2, 1) == 2

    def test_structural_equality(self):
        g1 = path_graph(3)
        g2 = path_graph(3)
        a = EdgeColoring.from_assignment(g1, 2, [1, 2])
        b = EdgeColoring.from_assignment(g2, 2, [1, 2])
        assert a == b and hash(a) == hash(b)
        assert a != EdgeColoring.from_assignment(g1, 2, [1, 1])


class TestEnumerateRainbowPaths:
    def test_monochrome_triangle_keeps_only_direct_edge(self):
        g, col = triangle_coloring([1, 1, 1])
        assert enumerate_rainbow_paths(g, col, 0, 1, 3) == [(0, 1)]

    def test_fully_distinct_triangle(self):
        g, col = triangle_coloring([1, 3, 2])
        assert enumerate_rainbow_paths(g, col, 0, 2, 3) == [(0, 2), (0, 1, 2)]

    def test_repeating_path_coloring_yields_nothing(self):
        g = path_graph(4)
        col = EdgeColoring.from_assignment(g, 2, [1, 2, 1])
        assert enumerate_rainbow_paths(g, col, 0, 3, 3) == []

    def test_rejects_equal_endpoints(self):
        g, col = triangle_coloring([1, 1, 1])
        with pytest.raises(ValueError):
            enumerate_rainbow_paths(g, col, 1, 1, 3)

    def test_rejects_nonpositive_max_len(self):
        g, col = triangle_coloring([1, 1, 1])
        with pytest.raises(ValueError):
            enumerate_rainbow_paths(g, col, 0, 1, 0)

    @given(colored_graphs(max_n=7), st.integers(1, 6))
    @settings(max_examples=120, deadline=None)
    def test_matches_brute_enumeration(self, gc, max_len):
        g, col = gc
        paths = enumerate_rainbow_paths(g, col, 0, g.n - 1, max_len)
        assert paths == brute_rainbow_paths(g, col, 0, g.n - 1, max_len)

    @given(colored_graphs(max_n=7))
    @settings(max_examples=80, deadline=None)
    def test_no_path_longer_than_color_count(self, gc):
        g, col = gc
        for q in enumerate_rainbow_paths(g, col, 0, g.n - 1, g.n):
            assert len(q) - 1 <= col.c

    @given(colored_graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_canonical_order(self, gc):
        g, col = gc
        paths = enumerate_rainbow_paths(g, col, 0, g.n - 1, g.n)
        assert paths == sorted(paths, key=lambda q: (len(q), q))


class TestMaxDisjointRainbowPaths:
    def test_monochrome_triangle(self):
        g, col = triangle_coloring([1, 1, 1])
        assert max_disjoint_rainbow_paths(g, col, 0, 1, 2) == 1

    def test_rainbow_k4_packs_three(self):
        g = complete_graph(4)
        col = EdgeColoring.from_assignment(g, 6, [1, 2, 3, 4, 5, 6])
        assert max_disjoint_rainbow_paths(g, col, 0, 1, 3) == 3

    def test_caps_at_k_target(self):
        g = complete_graph(4)
        col = EdgeColoring.from_assignment(g, 6, [1, 2, 3, 4, 5, 6])
        assert max_disjoint_rainbow_paths(g, col, 0, 1, 2) == 2

    def test_rejects_equal_endpoints(self):
        g, col = triangle_coloring([1, 2, 3])
        with pytest.raises(ValueError):
            max_disjoint_rainbow_paths(g, col, 2, 2, 1)

    def test_g8_instances_match_brute_force(self):
        hits = 0
        seed = 0
        while hits < 40:
            seed += 1
            g = gnp_generate(8, 0.6, seed)
            col = rainbow_color_random(g, 3, seed)
            paths = enumerate_rainbow_paths(g, col, 0, 7, col.c)
            if len(paths) > 20:
                continue
            hits += 1
            expected = brute_max_disjoint_rainbow(g, col, 0, 7)
            assert max_disjoint_rainbow_paths(g, col, 0, 7, 10) == min(expected, 10)

    @given(colored_graphs(max_n=7), st.integers(1, 4))
    @settings(max_examples=100, deadline=None)
    def test_matches_brute_force(self, gc, k_target):
        g, col = gc
        got = max_disjoint_rainbow_paths(g, col, 0, g.n - 1, k_target)
        assert got == min(brute_max_disjoint_rainbow(g, col, 0, g.n - 1), k_target)


class TestIsRainbowKConnected:
    def test_any_coloring_of_complete_graph_is_rainbow_1_connected(self):
        g = complete_graph(5)
        for seed in range(5):
            col = rainbow_color_random(g, 3, seed)
            assert is_rainbow_k_connected(g, col, 1).ok

    def test_monochrome_triangle_fails_k2_with_witness(self):
        g, col = triangle_coloring([1, 1, 1])
        ok, witness = is_rainbow_k_connected(g, col, 2)
        assert not ok and witness == (0, 1)

    def test_witness_is_lexicographically_first(self):
        g = path_graph(4)
        col = EdgeColoring.from_assignment(g, 2, [1, 2, 1])
        ok, witness = is_rainbow_k_connected(g, col, 1)
        # pair (0, 2) is fine (path 0-1-2 is rainbow); (0, 3) is the first failure
        assert not ok and witness == (0, 3)

    def test_rejects_coloring_of_other_graph(self):
        g = path_graph(3)
        other = Graph.from_edges(3, [(0, 1)])
        col = EdgeColoring.from_assignment(other, 1, [1])
        with pytest.raises(ValueError):
            is_rainbow_k_connected(g, col, 1)

    @given(colored_graphs(max_n=6), st.integers(1, 3))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_pairwise_brute_force(self, gc, k):
        g, col = gc
        ok, witness = is_rainbow_k_connected(g, col, k)
        failing = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if brute_max_disjoint_rainbow(g, col, u, v) < k
        ]
        if failing:
            assert not ok and witness == failing[0]
        else:
            assert ok and witness is None

    @pytest.mark.parametrize("c,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
    def test_matrix_route_matches_pair_route(self, c, k):
        for seed in range(4):
            g = gnp_generate(70, 0.12, seed)
            col = rainbow_color_random(g, c, seed + 100)
            assert _verify_matrix(g, col, k) == _verify_pairs(g, col, k)

    def test_matrix_route_subset_dp_with_four_colors(self):
        for seed in range(3):
            g = gnp_generate(40, 0.1, seed)
            col = rainbow_color_random(g, 4, seed + 7)
            assert _verify_matrix(g, col, 1) == _verify_pairs(g, col, 1)

    def test_matrix_route_handles_isolated_vertices(self):
        g = gnp_generate(70, 0.01, 3)
        col = rainbow_color_random(g, 2, 0)
        result = _verify_matrix(g, col, 1)
        assert result == _verify_pairs(g, col, 1)
        assert not result.ok


class TestRcExact:
    def test_clique_needs_one_color(self):
        res = rc_k_exact(complete_graph(4), 1)
        assert res.value == 1 and res.coloring is not None

    def test_path_needs_length_colors(self):
        assert rc_k_exact(path_graph(4), 1).value == 3

    def test_five_cycle_needs_three(self):
        assert rc_k_exact(cycle_graph(5), 1).value == 3

    def test_cut_vertex_means_infinite(self):
        res = rc_k_exact(path_graph(3), 2)
        assert res.value == INFINITE and res.coloring is None

    def test_disconnected_graph_is_infinite_even_for_k1(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert rc_k_exact(g, 1).value == INFINITE

    def test_exceeds_when_capped(self):
        assert rc_k_exact(path_graph(4), 1, max_colors=2).value is EXCEEDS

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceeded):
            rc_k_exact(complete_graph(6), 1)  # 15 edges > default budget 12
        assert rc_k_exact(complete_graph(6), 1, edge_budget=15).value == 1

    def test_certificate_verifies_and_is_minimal(self):
        for g in (cycle_graph(5), path_graph(4), cycle_graph(4)):
            res = rc_k_exact(g, 1)
            c = res.value
            assert isinstance(c, int)
            assert res.coloring.c == c
            assert is_rainbow_k_connected(g, res.coloring, 1).ok
            if c > 1:
                assert not any(
                    is_rainbow_k_connected(g, col, 1).ok
                    for col in all_colorings(g, c - 1)
                )

    def test_diameter_lower_bound_on_small_connected_graphs(self):
        for g in connected_labeled_graphs(4):
            value = rc_k_exact(g, 1).value
            assert value >= diameter(g)

    def test_tree_characterization_small(self):
        for n in (2, 3, 4, 5):
            for g in labeled_trees(n):
                assert rc_k_exact(g, 1).value == n - 1

    def test_clique_characterization_exhaustive(self):
        for n in range(2, 6):
            for g in all_labeled_graphs(n):
                for k in (1, 2):
                    expected = k == 1 and g.is_complete
                    assert (rc_k_exact(g, k).value == 1) == expected

    @given(colored_graphs(min_n=3, max_n=5, max_c=3), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_verdict_invariant_under_color_permutation(self, gc, perm_seed):
        g, col = gc
        perm = list(range(1, col.c + 1))
        random.Random(perm_seed).shuffle(perm)
        relabeled = EdgeColoring.from_assignment(
            g, col.c, [perm[color - 1] for color in col.assignment]
        )
        assert is_rainbow_k_connected(g, col, 1).ok == is_rainbow_k_connected(g, relabeled, 1).ok


class TestSentinels:
    def test_ordering_chain(self):
        assert 3 < EXCEEDS < INFINITE
        assert not EXCEEDS < 10**9
        assert EXCEEDS <= EXCEEDS and EXCEEDS == EXCEEDS
        assert INFINITE > EXCEEDS
        assert 5 < INFINITE

    def test_exceeds_is_not_a_number(self):
        assert EXCEEDS != 7 and EXCEEDS != math.inf


class TestValidatePathPacking:
    def test_accepts_valid_packing(self):
        g = complete_graph(4)
        packing = PathPacking(0, 1, ((0, 1), (0, 2, 1), (0, 3, 1)))
        validate_path_packing(g, packing)

    def test_rejects_wrong_endpoint(self):
        g = complete_graph(4)
        with pytest.raises(ValueError, match="does not run"):
            validate_path_packing(g, PathPacking(0, 1, ((0, 2),)))

    def test_rejects_missing_edge(self):
        g = path_graph(4)
        with pytest.raises(ValueError, match="missing edge"):
            validate_path_packing(g, PathPacking(0, 3, ((0, 3),)))

    def test_rejects_shared_internal_vertex(self):
        g = complete_graph(5)
        packing = PathPacking(0, 1, ((0, 2, 1), (0, 2, 1)))
        with pytest.raises(ValueError, match="internal"):
            validate_path_packing(g, packing)

    def test_rejects_wrong_length(self):
        g = complete_graph(4)
        with pytest.raises(ValueError, match="length"):
            validate_path_packing(g, PathPacking(0, 1, ((0, 1),)), required_length=2)

    def test_rejects_repeated_color(self):
        g = path_graph(3)
        col = EdgeColoring.from_assignment(g, 2, [1, 1])
        with pytest.raises(ValueError, match="color"):
            validate_path_packing(g, PathPacking(0, 2, ((0, 1, 2),)), coloring=col)

    def test_rejects_vertex_repetition(self):
        g = complete_graph(4)
        with pytest.raises(ValueError, match="repeats a vertex"):
            validate_path_packing(g, PathPacking(0, 1, ((0, 2, 0, 1),)))
