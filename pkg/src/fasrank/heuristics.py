"""Feedback arc set heuristics.

``greedy_fas`` and ``sort_fas`` build a linear arrangement of the nodes and
take its backward arcs (arcs from a later position to an earlier one) as the
FAS, which is valid by construction.  ``page_rank_fas`` instead removes edges
directly: it repeatedly scores the edges of each strongly connected component
by running PageRank on the component's line digraph and deletes the
top-scoring edge until no cycle remains.  Slower, but the arc sets are
typically far smaller.

Ties always break toward the smallest node id (or smallest edge id in
``page_rank_fas``), so every heuristic is deterministic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from time import perf_counter

import numpy as np

from .graph import DirectedGraph, EdgeId
from .line_digraph import line_digraph
from .pagerank import pagerank
from .scc import strongly_connected_components

# A linear arrangement is a plain list: position -> node id.
LinearArrangement = list


@dataclass
class FasResult:
    """A feedback arc set with its headline numbers.

    ``percentage`` is 100 * size / live-edge-count of the input graph (0.0
    for an edgeless graph).  ``elapsed`` is wall-clock seconds of the call
    that produced the result; it takes no part in reproducibility claims.
    """

    edges: set[EdgeId]
    size: int
    percentage: float
    elapsed: float


def _result(g: DirectedGraph, edges: set[int], elapsed: float) -> FasResult:
    m = g.edge_count
    pct = 100.0 * len(edges) / m if m else 0.0
    return FasResult(edges, len(edges), pct, elapsed)


def backward_arcs(g: DirectedGraph, order: LinearArrangement) -> FasResult:
    """FAS induced by an arrangement: every arc whose head precedes its tail.

    ``order`` must be a permutation of all node ids.  Self-loops are backward
    by convention — no arrangement can orient them forward.
    """
    start = perf_counter()
    pos = _positions(g, order)
    fas = {eid for eid, tail, head in g.edges() if pos[head] <= pos[tail]}
    return _result(g, fas, perf_counter() - start)


def _positions(g: DirectedGraph, order: LinearArrangement) -> list[int]:
    n = g.node_count
    if len(order) != n:
        raise ValueError(f"arrangement has {len(order)} entries for {n} nodes")
    pos = [-1] * n
    for idx, u in enumerate(order):
        if not isinstance(u, int) or not 0 <= u < n or pos[u] != -1:
            raise ValueError("arrangement is not a permutation of the node ids")
        pos[u] = idx
    return pos


# ---- GreedyFAS ----

def greedy_fas(g: DirectedGraph) -> tuple[LinearArrangement, FasResult]:
    """Sink/source peeling with a max-delta fallback.

    Repeatedly: siphon every sink into the tail sequence s2 (prepending) and
    every source into the head sequence s1 (appending); if nodes remain, move
    the node maximising delta = outdeg - indeg (smallest id on ties) to s1
    and repeat.  The arrangement is s1 followed by s2; the FAS is its
    backward arcs.

    Nodes are binned by delta so the fallback pick is O(1) amortised over
    the run; sinks and sources pop from id-ordered heaps.
    """
    start = perf_counter()
    n = g.node_count
    if n == 0:
        return [], _result(g, set(), perf_counter() - start)

    heads_of = g._heads
    tails_of = g._tails
    out_nbrs = [[heads_of[e] for e in g.out_edges(u)] for u in range(n)]
    in_nbrs = [[tails_of[e] for e in g.in_edges(u)] for u in range(n)]
    out_deg = [len(adj) for adj in out_nbrs]
    in_deg = [len(adj) for adj in in_nbrs]
    delta = [o - i for o, i in zip(out_deg, in_deg)]

    buckets: dict[int, set[int]] = {}
    for u in range(n):
        buckets.setdefault(delta[u], set()).add(u)
    max_delta = max(delta)
    sink_heap = [u for u in range(n) if out_deg[u] == 0]
    source_heap = [u for u in range(n) if in_deg[u] == 0 and out_deg[u] != 0]
    heapq.heapify(sink_heap)
    heapq.heapify(source_heap)

    removed = bytearray(n)
    remaining = n
    s1: list[int] = []
    s2_rev: list[int] = []

    def take(u: int) -> None:
        nonlocal remaining, max_delta
        removed[u] = 1
        remaining -= 1
        buckets[delta[u]].discard(u)
        for v in out_nbrs[u]:
            if removed[v] or v == u:
                continue
            in_deg[v] -= 1
            buckets[delta[v]].discard(v)
            delta[v] += 1
            buckets.setdefault(delta[v], set()).add(v)
            if delta[v] > max_delta:
                max_delta = delta[v]
            if in_deg[v] == 0:
                heapq.heappush(source_heap, v)
        for w in in_nbrs[u]:
            if removed[w] or w == u:
                continue
            out_deg[w] -= 1
            buckets[delta[w]].discard(w)
            delta[w] -= 1
            buckets.setdefault(delta[w], set()).add(w)
            if out_deg[w] == 0:
                heapq.heappush(sink_heap, w)

    while remaining:
        while sink_heap:
            u = heapq.heappop(sink_heap)
            if removed[u]:
                continue
            s2_rev.append(u)
            take(u)
        while source_heap:
            u = heapq.heappop(source_heap)
            if removed[u]:
                continue
            s1.append(u)
            take(u)
        if not remaining:
            break
        while True:
            bucket = buckets.get(max_delta)
            if bucket:
                u = min(bucket)
                break
            max_delta -= 1
        s1.append(u)
        take(u)

    order = s1 + s2_rev[::-1]
    fas = backward_arcs(g, order)
    fas.elapsed = perf_counter() - start
    return order, fas


# ---- SortFAS ----

def sort_fas(
    g: DirectedGraph, initial: LinearArrangement | None = None
) -> tuple[LinearArrangement, FasResult]:
    """One left-insertion pass over the arrangement (identity by default).

    Taking nodes in initial order, each node slides to the leftmost position
    that minimises its backward-arc balance against the nodes placed before
    it: scanning right-to-left, an arc to the scanned node counts -1, an arc
    from it +1, and the node lands at the last scanned position where the
    running total touched its minimum.  Quadratic overall; arc membership
    checks are O(1) set lookups.
    """
    start = perf_counter()
    n = g.node_count
    order = list(range(n)) if initial is None else list(initial)
    _positions(g, order)  # permutation check

    succ: list[set[int]] = [set() for _ in range(n)]
    for _, t, h in g.edges():
        succ[t].add(h)

    for i in range(n):
        v = order[i]
        val = 0
        minimum = 0
        loc = i
        succ_v = succ[v]
        for j in range(i - 1, -1, -1):
            w = order[j]
            if w in succ_v:
                val -= 1
            elif v in succ[w]:
                val += 1
            if val <= minimum:
                minimum = val
                loc = j
        if loc != i:
            order.pop(i)
            order.insert(loc, v)

    fas = backward_arcs(g, order)
    fas.elapsed = perf_counter() - start
    return order, fas


# ---- PageRankFAS ----

def page_rank_fas(g: DirectedGraph, iterations: int = 5) -> FasResult:
    """Break every cycle by deleting PageRank-ranked edges.

    Loop until the working copy is acyclic: decompose into strongly
    connected components; for each nontrivial component build its line
    digraph, run ``iterations`` PageRank sweeps over it, and remove the edge
    whose line node scores highest (smallest edge id on ties).  One edge
    leaves each cyclic component per round, then components are recomputed.
    A self-loop forms its own nontrivial component whose line digraph is a
    single self-looped node, so it is removed through the ordinary path.

    Returns the accumulated edge set; edge count strictly decreases each
    round, so termination is guaranteed.
    """
    start = perf_counter()
    work = g.copy()
    fas: set[int] = set()
    while True:
        decomp = strongly_connected_components(work)
        cyclic = [c for c, flag in zip(decomp.components, decomp.nontrivial) if flag]
        if not cyclic:
            break
        for comp in cyclic:
            view = work.induced_subgraph(comp)
            ld = line_digraph(view, comp[0])
            scores = pagerank(ld.graph, iterations)
            top = int(np.argmax(scores))  # first occurrence == smallest origin edge id
            eid = ld.origin_edge[top]
            fas.add(eid)
            work.remove_edge(eid)
    return _result(g, fas, perf_counter() - start)
