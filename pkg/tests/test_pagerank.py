import random

import numpy as np
import pytest

from fasrank import DirectedGraph, full_view, line_digraph, pagerank

from oracles import random_digraph, reference_pagerank


def test_two_cycle_stays_balanced():
    g = DirectedGraph.from_pairs(2, [(0, 1), (1, 0)])
    assert list(pagerank(g, 5)) == [0.5, 0.5]


def test_self_loop_keeps_all_mass():
    g = DirectedGraph.from_pairs(1, [(0, 0)])
    assert list(pagerank(g, 5)) == [1.0]


def test_two_triangle_line_graph_scores():
    g = DirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)])
    ld = line_digraph(full_view(g), 0)
    scores = pagerank(ld.graph, 5)
    assert list(scores) == [0.4, 0.2, 0.1, 0.2, 0.1]


def test_zero_sweeps_returns_exact_uniform():
    g = DirectedGraph.from_pairs(4, [(0, 1), (2, 3)])
    scores = pagerank(g, 0)
    assert list(scores) == [0.25, 0.25, 0.25, 0.25]


def test_empty_graph_rejected():
    with pytest.raises(ValueError, match="nonempty"):
        pagerank(DirectedGraph(0), 5)


def test_negative_sweeps_rejected():
    g = DirectedGraph(1)
    with pytest.raises(ValueError, match="sweeps"):
        pagerank(g, -1)


def test_sinks_absorb_everything():
    # Both feeders point at node 2; it has no out-edges so it keeps what
    # it gets, and after one sweep it holds all the mass.
    g = DirectedGraph.from_pairs(3, [(0, 2), (1, 2)])
    assert list(pagerank(g, 1)) == [0.0, 0.0, 1.0]
    assert list(pagerank(g, 7)) == [0.0, 0.0, 1.0]


def test_isolated_node_retains_its_share():
    g = DirectedGraph.from_pairs(3, [(0, 1), (1, 0)])
    scores = pagerank(g, 6)
    assert scores[2] == pytest.approx(1.0 / 3.0)
    assert float(scores.sum()) == pytest.approx(1.0, abs=1e-12)


def test_edgeless_graph_stays_uniform():
    g = DirectedGraph(4)
    assert list(pagerank(g, 3)) == [0.25, 0.25, 0.25, 0.25]


def test_deterministic_across_calls():
    g = random_digraph(random.Random(5), 40, 120, self_loops=True)
    first = pagerank(g, 8)
    second = pagerank(g, 8)
    assert np.array_equal(first, second)


def test_bit_identical_to_sequential_reference():
    rng = random.Random(6)
    for trial in range(120):
        n = rng.randrange(1, 25)
        g = random_digraph(rng, n, rng.randrange(0, 3 * n + 1), self_loops=True)
        if trial % 3 == 0:
            for eid in list(g.edge_ids()):
                if rng.random() < 0.25:
                    g.remove_edge(eid)
        for sweeps in (0, 1, 2, 5):
            assert list(pagerank(g, sweeps)) == reference_pagerank(g, sweeps)


def test_mass_is_conserved():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randrange(1, 40)
        g = random_digraph(rng, n, rng.randrange(0, 4 * n + 1), self_loops=True)
        for sweeps in range(1, 11):
            total = float(pagerank(g, sweeps).sum())
            assert abs(total - 1.0) <= 1e-9
