"""Mutable directed graph with stable integer edge ids.

Nodes are the dense range ``0..node_count-1`` and are fixed at construction.
Edges are identified by the integer id assigned when they were added; removing
an edge leaves a tombstone so every other edge keeps its id.  The structure is
a simple digraph: parallel edges are rejected, self-loops are allowed.
"""

from __future__ import annotations

from typing import Iterable, Iterator

NodeId = int
EdgeId = int


class DirectedGraph:
    __slots__ = ("_n", "_tails", "_heads", "_alive", "_out", "_in", "_pairs", "_live")

    def __init__(self, node_count: int) -> None:
        if node_count < 0:
            raise ValueError(f"node_count must be >= 0, got {node_count}")
        self._n = node_count
        self._tails: list[int] = []        # per edge id, tombstones keep their slot
        self._heads: list[int] = []
        self._alive = bytearray()
        self._out: list[list[int]] = [[] for _ in range(node_count)]
        self._in: list[list[int]] = [[] for _ in range(node_count)]
        self._pairs: set[tuple[int, int]] = set()
        self._live = 0

    @classmethod
    def from_pairs(cls, node_count: int, pairs: Iterable[tuple[int, int]]) -> "DirectedGraph":
        """Bulk-build a graph from (tail, head) pairs; ids follow input order."""
        g = cls(node_count)
        append_t = g._tails.append
        append_h = g._heads.append
        alive = g._alive
        out = g._out
        inn = g._in
        seen = g._pairs
        eid = 0
        for tail, head in pairs:
            if not (0 <= tail < node_count and 0 <= head < node_count):
                raise ValueError(f"edge ({tail}, {head}) out of range for {node_count} nodes")
            key = (tail, head)
            if key in seen:
                raise ValueError(f"duplicate edge ({tail}, {head})")
            seen.add(key)
            append_t(tail)
            append_h(head)
            alive.append(1)
            out[tail].append(eid)
            inn[head].append(eid)
            eid += 1
        g._live = eid
        return g

    # ---- size ----

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        """Number of live (non-removed) edges."""
        return self._live

    # ---- mutation ----

    def add_edge(self, tail: NodeId, head: NodeId) -> EdgeId:
        """Insert the edge tail->head and return its id.

        Raises ValueError if either endpoint is out of range or the edge
        already exists.  Self-loops are accepted.
        """
        if not (0 <= tail < self._n and 0 <= head < self._n):
            raise ValueError(f"edge ({tail}, {head}) out of range for {self._n} nodes")
        key = (tail, head)
        if key in self._pairs:
            raise ValueError(f"duplicate edge ({tail}, {head})")
        eid = len(self._tails)
        self._pairs.add(key)
        self._tails.append(tail)
        self._heads.append(head)
        self._alive.append(1)
        self._out[tail].append(eid)
        self._in[head].append(eid)
        self._live += 1
        return eid

    def remove_edge(self, eid: EdgeId) -> None:
        """Tombstone a live edge.  Other edge ids are unaffected."""
        if not (0 <= eid < len(self._tails)) or not self._alive[eid]:
            raise ValueError(f"no live edge with id {eid}")
        tail = self._tails[eid]
        head = self._heads[eid]
        self._alive[eid] = 0
        self._pairs.discard((tail, head))
        self._out[tail].remove(eid)
        self._in[head].remove(eid)
        self._live -= 1

    # ---- queries ----

    def is_live(self, eid: EdgeId) -> bool:
        return 0 <= eid < len(self._tails) and bool(self._alive[eid])

    def edge(self, eid: EdgeId) -> tuple[NodeId, NodeId]:
        """Return (tail, head) of a live edge."""
        if not self.is_live(eid):
            raise ValueError(f"no live edge with id {eid}")
        return self._tails[eid], self._heads[eid]

    def has_edge(self, tail: NodeId, head: NodeId) -> bool:
        return (tail, head) in self._pairs

    def edge_id(self, tail: NodeId, head: NodeId) -> EdgeId:
        """Id of the live edge tail->head (ValueError if absent)."""
        if (tail, head) not in self._pairs:
            raise ValueError(f"no edge ({tail}, {head})")
        for eid in self._out[tail]:
            if self._heads[eid] == head:
                return eid
        raise AssertionError("adjacency out of sync with pair set")

    def out_edges(self, u: NodeId) -> list[EdgeId]:
        """Live out-edge ids of u, in insertion order.  Do not mutate."""
        return self._out[u]

    def in_edges(self, u: NodeId) -> list[EdgeId]:
        return self._in[u]

    def tail(self, eid: EdgeId) -> NodeId:
        return self._tails[eid]

    def head(self, eid: EdgeId) -> NodeId:
        return self._heads[eid]

    def out_degree(self, u: NodeId) -> int:
        return len(self._out[u])

    def in_degree(self, u: NodeId) -> int:
        return len(self._in[u])

    def delta(self, u: NodeId) -> int:
        """Out-degree minus in-degree; a self-loop contributes to both."""
        return len(self._out[u]) - len(self._in[u])

    def is_sink(self, u: NodeId) -> bool:
        """True iff u has no live out-edges.  An isolated node is a sink
        and a source at once; a self-loop node is neither."""
        return not self._out[u]

    def is_source(self, u: NodeId) -> bool:
        return not self._in[u]

    def edges(self) -> Iterator[tuple[EdgeId, NodeId, NodeId]]:
        """Iterate (eid, tail, head) over live edges in ascending id order."""
        tails = self._tails
        heads = self._heads
        alive = self._alive
        for eid in range(len(tails)):
            if alive[eid]:
                yield eid, tails[eid], heads[eid]

    def edge_ids(self) -> list[EdgeId]:
        alive = self._alive
        return [eid for eid in range(len(self._tails)) if alive[eid]]

    # ---- copies and views ----

    def copy(self) -> "DirectedGraph":
        g = DirectedGraph.__new__(DirectedGraph)
        g._n = self._n
        g._tails = list(self._tails)
        g._heads = list(self._heads)
        g._alive = bytearray(self._alive)
        g._out = [list(adj) for adj in self._out]
        g._in = [list(adj) for adj in self._in]
        g._pairs = set(self._pairs)
        g._live = self._live
        return g

    def compact(self) -> tuple["DirectedGraph", dict[EdgeId, EdgeId]]:
        """Copy without tombstones.  Returns (graph, old id -> new id).

        Nothing in this package needs compaction for correctness; it exists
        for long-lived graphs that have shed many edges.
        """
        g = DirectedGraph(self._n)
        mapping: dict[EdgeId, EdgeId] = {}
        for eid, tail, head in self.edges():
            mapping[eid] = g.add_edge(tail, head)
        return g, mapping

    def induced_subgraph(self, nodes: Iterable[NodeId]) -> "Subgraph":
        """View of the live edges whose endpoints both lie in ``nodes``.

        Node and edge ids in the view are the parent's ids; nothing is
        renumbered or copied out of the adjacency lists.
        """
        member = set(nodes)
        for u in member:
            if not 0 <= u < self._n:
                raise ValueError(f"node {u} out of range")
        ordered = sorted(member)
        heads = self._heads
        out: dict[int, list[tuple[int, int]]] = {}
        edge_ids: list[int] = []
        for u in ordered:
            kept = [(eid, heads[eid]) for eid in self._out[u] if heads[eid] in member]
            out[u] = kept
            edge_ids.extend(eid for eid, _ in kept)
        edge_ids.sort()
        return Subgraph(self, ordered, edge_ids, out)

    # ---- diagnostics ----

    def check_consistency(self) -> None:
        """Audit the adjacency structure against the edge store.

        Raises AssertionError on any mismatch.  Intended for tests; runtime
        code relies on the mutation ops maintaining these invariants.
        """
        assert len(self._tails) == len(self._heads) == len(self._alive)
        live = 0
        pairs: set[tuple[int, int]] = set()
        for eid, alive in enumerate(self._alive):
            tail = self._tails[eid]
            head = self._heads[eid]
            if alive:
                live += 1
                pairs.add((tail, head))
                assert eid in self._out[tail], f"edge {eid} missing from out[{tail}]"
                assert eid in self._in[head], f"edge {eid} missing from in[{head}]"
        assert live == self._live, f"live count {self._live} != {live}"
        assert pairs == self._pairs, "pair set out of sync"
        out_total = 0
        in_total = 0
        for u in range(self._n):
            for eid in self._out[u]:
                assert self._alive[eid] and self._tails[eid] == u
            for eid in self._in[u]:
                assert self._alive[eid] and self._heads[eid] == u
            out_total += len(self._out[u])
            in_total += len(self._in[u])
        assert out_total == live and in_total == live

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self._n}, m={self._live})"


class Subgraph:
    """Read-only induced-subgraph view with parent ids.

    ``nodes`` and ``edge_ids`` are sorted ascending; ``out[u]`` lists
    ``(edge_id, head)`` for the retained out-edges of ``u`` in the parent's
    adjacency order.
    """

    __slots__ = ("parent", "nodes", "edge_ids", "out")

    def __init__(
        self,
        parent: DirectedGraph,
        nodes: list[NodeId],
        edge_ids: list[EdgeId],
        out: dict[NodeId, list[tuple[EdgeId, NodeId]]],
    ) -> None:
        self.parent = parent
        self.nodes = nodes
        self.edge_ids = edge_ids
        self.out = out

    @property
    def edge_count(self) -> int:
        return len(self.edge_ids)

    def edges(self) -> Iterator[tuple[EdgeId, NodeId, NodeId]]:
        parent = self.parent
        for eid in self.edge_ids:
            yield eid, parent.tail(eid), parent.head(eid)

    def __repr__(self) -> str:
        return f"Subgraph(nodes={len(self.nodes)}, edges={len(self.edge_ids)})"


def full_view(g: DirectedGraph) -> Subgraph:
    """The whole graph as a Subgraph (used where an op expects a view)."""
    return g.induced_subgraph(range(g.node_count))
