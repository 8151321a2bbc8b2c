"""Directed line graph of a strongly connected (sub)graph.

The line digraph L has one node per source edge and an edge
L(u,v) -> L(v,w) for every length-2 path u->v->w.  Construction is a single
depth-first traversal of the source graph: scanning edge (v,u) emits the
line edge from the edge that led into v, and when u has already been entered
it instead links (v,u) to every line node for an edge leaving u.  Each node is
entered exactly once, so every composable edge pair is emitted exactly once —
provided the traversal reaches every edge, which strong connectivity
guarantees.  Inputs whose edges are not fully covered from ``start`` are
rejected rather than truncated.

Line node i corresponds to ``edge_ids[i]`` of the source view (ascending
source edge id), so index order and origin-edge-id order coincide.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import DirectedGraph, EdgeId, NodeId, Subgraph


class CoverageError(ValueError):
    """Traversal from the start node failed to reach every edge."""


@dataclass
class LineDigraph:
    graph: DirectedGraph                      # nodes 0..m-1 in line-node order
    origin_edge: list[EdgeId]                 # line node -> source edge id
    nodes_from: dict[NodeId, list[int]]       # source node u -> line nodes of u's out-edges
    _line_of: dict[EdgeId, int] = field(repr=False, default_factory=dict)

    def line_node(self, eid: EdgeId) -> int:
        return self._line_of[eid]


def line_digraph(s: Subgraph, start: NodeId) -> LineDigraph:
    """Build L(s) by depth-first traversal from ``start``.

    ``s`` must be strongly connected (a single self-loop node qualifies);
    otherwise a CoverageError is raised once the traversal comes up short.
    """
    if start not in s.out:
        raise ValueError(f"start node {start} not in subgraph")
    edge_ids = s.edge_ids
    line_of = {eid: i for i, eid in enumerate(edge_ids)}
    out = s.out
    nodes_from = {u: [line_of[eid] for eid, _ in out[u]] for u in s.nodes}

    emitted_tails: list[int] = []
    emitted_heads: list[int] = []
    emit_tail = emitted_tails.append
    emit_head = emitted_heads.append

    visited = {start}
    add_visited = visited.add
    # Frame: [node, line node of the edge that entered it (-1 at the root),
    # position of the next out-edge to scan].
    frames: list[list[int]] = [[start, -1, 0]]
    while frames:
        frame = frames[-1]
        v, prev, i = frame
        adj = out[v]
        pushed = False
        while i < len(adj):
            eid, u = adj[i]
            i += 1
            z = line_of[eid]
            if prev >= 0:
                emit_tail(prev)
                emit_head(z)
            if u not in visited:
                frame[2] = i
                add_visited(u)
                frames.append([u, z, 0])
                pushed = True
                break
            for k in nodes_from[u]:
                emit_tail(z)
                emit_head(k)
        if not pushed:
            frames.pop()

    uncovered = sum(1 for u in s.nodes if out[u] and u not in visited)
    if uncovered:
        raise CoverageError(
            f"{uncovered} node(s) with out-edges unreachable from {start}; "
            "input is not strongly connected"
        )

    lg = DirectedGraph.from_pairs(len(edge_ids), zip(emitted_tails, emitted_heads))
    return LineDigraph(lg, list(edge_ids), nodes_from, line_of)


def line_digraph_oracle(s: Subgraph) -> LineDigraph:
    """Definitional rebuild: scan every ordered edge pair for head==tail.

    Quadratic in the edge count; exists so the traversal-based construction
    has something independent to be checked against.
    """
    edge_list = list(s.edges())
    edge_ids = s.edge_ids
    line_of = {eid: i for i, eid in enumerate(edge_ids)}
    lg = DirectedGraph(len(edge_ids))
    for e1, _, h1 in edge_list:
        for e2, t2, _ in edge_list:
            if h1 == t2:
                lg.add_edge(line_of[e1], line_of[e2])
    nodes_from = {u: [line_of[eid] for eid, _ in s.out[u]] for u in s.nodes}
    return LineDigraph(lg, list(edge_ids), nodes_from, line_of)
