import random

import pytest

from fasrank import (
    DirectedGraph,
    backward_arcs,
    generate,
    GeneratorParams,
    greedy_fas,
    is_acyclic,
    page_rank_fas,
    sort_fas,
    validate_fas,
)

from oracles import brute_min_fas, naive_greedy_fas_order, random_digraph


def triangle() -> DirectedGraph:
    return DirectedGraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])


def two_triangles() -> DirectedGraph:
    return DirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)])


def tossed_graph(rng: random.Random, n_max: int = 30) -> DirectedGraph:
    """Random graph, sometimes with self-loops and tombstoned edges."""
    n = rng.randrange(1, n_max)
    g = random_digraph(rng, n, rng.randrange(0, 3 * n + 1), self_loops=rng.random() < 0.4)
    if rng.random() < 0.3:
        for eid in list(g.edge_ids()):
            if rng.random() < 0.2:
                g.remove_edge(eid)
    return g


class TestBackwardArcs:
    def test_positions_rule(self):
        g = DirectedGraph.from_pairs(3, [(0, 1), (1, 0), (2, 1)])
        fas = backward_arcs(g, [1, 2, 0])
        assert fas.edges == {0, 2}
        assert fas.size == 2
        assert fas.percentage == pytest.approx(100.0 * 2 / 3)

    def test_identity_order_on_forward_chain_is_empty(self):
        g = DirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        fas = backward_arcs(g, [0, 1, 2, 3])
        assert fas.edges == set()
        assert fas.size == 0

    def test_reversed_order_flips_everything(self):
        g = DirectedGraph.from_pairs(3, [(0, 1), (1, 2)])
        assert backward_arcs(g, [2, 1, 0]).edges == {0, 1}

    def test_self_loop_is_always_backward(self):
        g = DirectedGraph.from_pairs(2, [(0, 1), (1, 1)])
        assert backward_arcs(g, [0, 1]).edges == {1}
        assert backward_arcs(g, [1, 0]).edges == {0, 1}

    def test_result_is_always_a_valid_fas(self):
        rng = random.Random(21)
        for _ in range(100):
            g = tossed_graph(rng)
            order = list(range(g.node_count))
            rng.shuffle(order)
            fas = backward_arcs(g, order)
            assert validate_fas(g, fas.edges)

    def test_non_permutations_are_rejected(self):
        g = triangle()
        for bad in ([0, 1], [0, 1, 1], [0, 1, 3], [0, 1, 2, 2], ["a", 1, 2]):
            with pytest.raises(ValueError):
                backward_arcs(g, bad)

    def test_percentage_is_zero_on_edgeless_graph(self):
        g = DirectedGraph(2)
        fas = backward_arcs(g, [0, 1])
        assert fas.size == 0 and fas.percentage == 0.0


class TestGreedyFas:
    def test_triangle_golden(self):
        order, fas = greedy_fas(triangle())
        assert order == [0, 1, 2]
        assert fas.edges == {2}
        assert fas.size == 1
        assert fas.percentage == pytest.approx(100.0 / 3.0)

    def test_two_triangles_golden(self):
        order, fas = greedy_fas(two_triangles())
        assert order == [1, 3, 2, 0]
        assert fas.edges == {0}
        assert fas.size == 1

    def test_dag_yields_empty_fas(self):
        g = DirectedGraph.from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        order, fas = greedy_fas(g)
        assert fas.size == 0
        assert validate_fas(g, fas.edges)

    def test_empty_and_edgeless_graphs(self):
        order, fas = greedy_fas(DirectedGraph(0))
        assert order == [] and fas.size == 0 and fas.percentage == 0.0
        order, fas = greedy_fas(DirectedGraph(3))
        assert sorted(order) == [0, 1, 2] and fas.size == 0

    def test_self_loop_lands_in_the_fas(self):
        g = DirectedGraph.from_pairs(2, [(0, 1), (1, 1)])
        _, fas = greedy_fas(g)
        assert 1 in fas.edges
        assert validate_fas(g, fas.edges)

    def test_matches_full_rescan_reference(self):
        rng = random.Random(22)
        for _ in range(300):
            g = tossed_graph(rng, n_max=40)
            order, fas = greedy_fas(g)
            assert order == naive_greedy_fas_order(g)
            assert validate_fas(g, fas.edges)
            assert fas.edges == backward_arcs(g, order).edges

    def test_input_graph_is_untouched(self):
        g = triangle()
        greedy_fas(g)
        assert g.edge_count == 3
        g.check_consistency()


class TestSortFas:
    def test_triangle_golden(self):
        order, fas = sort_fas(triangle())
        assert order == [2, 0, 1]
        assert fas.edges == {1}
        assert fas.size == 1

    def test_explicit_initial_arrangement(self):
        order, fas = sort_fas(triangle(), [2, 1, 0])
        assert order == [0, 1, 2]
        assert fas.edges == {2}

    def test_default_initial_is_identity(self):
        g = DirectedGraph.from_pairs(3, [(0, 1), (1, 2)])
        order, fas = sort_fas(g)
        assert order == [0, 1, 2]
        assert fas.size == 0

    def test_never_worse_than_initial_without_opposed_pairs(self):
        # The scan scores each placed node as either a predecessor or a
        # successor (never both), so the per-move gain argument only holds
        # when no pair of nodes carries arcs in both directions.
        rng = random.Random(23)
        for _ in range(200):
            n = rng.randrange(1, 30)
            g = DirectedGraph(n)
            for _ in range(rng.randrange(0, 3 * n + 1)):
                t, h = rng.randrange(n), rng.randrange(n)
                if t != h and not g.has_edge(t, h) and not g.has_edge(h, t):
                    g.add_edge(t, h)
            initial = list(range(n))
            rng.shuffle(initial)
            before = backward_arcs(g, initial).size
            order, fas = sort_fas(g, initial)
            assert fas.size <= before
            assert validate_fas(g, fas.edges)
            assert sorted(order) == list(range(n))

    def test_result_is_valid_on_arbitrary_graphs(self):
        rng = random.Random(27)
        for _ in range(150):
            g = tossed_graph(rng)
            initial = list(range(g.node_count))
            rng.shuffle(initial)
            order, fas = sort_fas(g, initial)
            assert validate_fas(g, fas.edges)
            assert sorted(order) == list(range(g.node_count))

    def test_opposed_pair_counts_as_pure_gain(self):
        # A 2-cycle partner scores -1 for the placed arc and nothing for the
        # opposing arc, so the pass happily trades it against other edges —
        # here it turns a one-arc arrangement into a two-arc one.
        g = DirectedGraph.from_pairs(3, [(1, 2), (2, 1), (0, 2)])
        order, fas = sort_fas(g)
        assert order == [2, 1, 0]
        assert fas.edges == {0, 2}
        assert backward_arcs(g, [0, 1, 2]).size == 1

    def test_non_permutation_initial_rejected(self):
        with pytest.raises(ValueError):
            sort_fas(triangle(), [0, 1])
        with pytest.raises(ValueError):
            sort_fas(triangle(), [0, 0, 1])

    def test_empty_graph(self):
        order, fas = sort_fas(DirectedGraph(0))
        assert order == [] and fas.size == 0


class TestPageRankFas:
    def test_two_triangles_golden(self):
        fas = page_rank_fas(two_triangles())
        assert fas.edges == {0}
        assert fas.size == 1
        assert fas.percentage == pytest.approx(20.0)

    def test_triangle(self):
        fas = page_rank_fas(triangle())
        assert fas.edges == {0}

    def test_dag_needs_nothing(self):
        g = DirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
        fas = page_rank_fas(g)
        assert fas.edges == set()
        assert fas.percentage == 0.0

    def test_self_loop_is_removed(self):
        g = DirectedGraph.from_pairs(2, [(0, 1), (1, 1)])
        fas = page_rank_fas(g)
        assert fas.edges == {1}

    def test_disjoint_cycles_lose_one_edge_each(self):
        g = DirectedGraph.from_pairs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        fas = page_rank_fas(g)
        assert fas.edges == {0, 3}

    def test_input_graph_is_untouched(self):
        g = two_triangles()
        page_rank_fas(g)
        assert g.edge_count == 5
        g.check_consistency()

    def test_valid_and_deterministic_on_random_graphs(self):
        rng = random.Random(24)
        for _ in range(60):
            g = tossed_graph(rng, n_max=25)
            first = page_rank_fas(g)
            second = page_rank_fas(g)
            assert first.edges == second.edges
            assert validate_fas(g, first.edges)
            trimmed = g.copy()
            for eid in first.edges:
                trimmed.remove_edge(eid)
            assert is_acyclic(trimmed)

    def test_zero_iterations_still_produces_a_valid_fas(self):
        rng = random.Random(25)
        for _ in range(20):
            g = tossed_graph(rng, n_max=15)
            fas = page_rank_fas(g, iterations=0)
            assert validate_fas(g, fas.edges)

    def test_never_below_the_optimum_on_small_graphs(self):
        rng = random.Random(26)
        for _ in range(40):
            n = rng.randrange(1, 5)
            g = random_digraph(rng, n, rng.randrange(0, n * n), self_loops=False)
            pairs = [(t, h) for _, t, h in g.edges()]
            best = brute_min_fas(n, pairs)
            assert page_rank_fas(g).size >= best
            assert greedy_fas(g)[1].size >= best
            assert sort_fas(g)[1].size >= best

    def test_beats_arrangement_heuristics_on_generated_instance(self):
        g, _ = generate(GeneratorParams(120, 3.0, 0.2, 9))
        pr = page_rank_fas(g)
        gr = greedy_fas(g)[1]
        assert validate_fas(g, pr.edges)
        assert pr.size <= gr.size
