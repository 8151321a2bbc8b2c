"""Strongly connected components via Tarjan's algorithm.

The traversal uses an explicit stack (no recursion) so graphs are not limited
by the interpreter's recursion depth.  Component order is deterministic:
components are sorted by their smallest node id, and nodes inside a component
are sorted ascending.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DirectedGraph, NodeId

UNVISITED = -1


@dataclass
class SccDecomposition:
    component_of: list[int]          # node id -> component index
    components: list[list[NodeId]]   # sorted by smallest member, members ascending
    nontrivial: list[bool]           # size > 1, or a singleton with a self-loop

    def nontrivial_components(self) -> list[list[NodeId]]:
        return [c for c, flag in zip(self.components, self.nontrivial) if flag]


def strongly_connected_components(g: DirectedGraph) -> SccDecomposition:
    n = g.node_count
    index = [UNVISITED] * n
    lowlink = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    raw_components: list[list[int]] = []
    counter = 0

    # Adjacency flattened to head lists once; Tarjan touches each edge once.
    heads = g._heads
    succ = [[heads[eid] for eid in g.out_edges(v)] for v in range(n)]

    for root in range(n):
        if index[root] != UNVISITED:
            continue
        # Each frame is [node, next-neighbour position].
        frames: list[list[int]] = [[root, 0]]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = 1
        while frames:
            frame = frames[-1]
            v = frame[0]
            nbrs = succ[v]
            advanced = False
            i = frame[1]
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if index[w] == UNVISITED:
                    frame[1] = i
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = 1
                    frames.append([w, 0])
                    advanced = True
                    break
                if on_stack[w] and lowlink[v] > index[w]:
                    lowlink[v] = index[w]
            if advanced:
                continue
            frame[1] = i
            frames.pop()
            if frames:
                parent = frames[-1][0]
                if lowlink[parent] > lowlink[v]:
                    lowlink[parent] = lowlink[v]
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                raw_components.append(comp)

    for comp in raw_components:
        comp.sort()
    raw_components.sort(key=lambda comp: comp[0])

    component_of = [0] * n
    nontrivial = []
    for ci, comp in enumerate(raw_components):
        for u in comp:
            component_of[u] = ci
        flag = len(comp) > 1 or g.has_edge(comp[0], comp[0])
        nontrivial.append(flag)
    return SccDecomposition(component_of, raw_components, nontrivial)


def is_acyclic(g: DirectedGraph) -> bool:
    """True iff the live edges contain no directed cycle (self-loops count)."""
    return not any(strongly_connected_components(g).nontrivial)
