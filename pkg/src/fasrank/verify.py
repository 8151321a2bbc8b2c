"""Independent FAS validation.

Deliberately self-contained: acyclicity is decided by Kahn-style topological
peeling over plain degree arrays, sharing no code with the SCC module the
heuristics rely on, so a bug there cannot vouch for itself here.
"""

from __future__ import annotations

from collections import deque

from .graph import DirectedGraph, EdgeId


def validate_fas(g: DirectedGraph, fas: set[EdgeId]) -> bool:
    """True iff removing ``fas`` leaves g acyclic.

    Every id in ``fas`` must be a live edge of g (ValueError otherwise).
    The check peels zero-in-degree nodes until none remain; leftover nodes
    mean a surviving cycle.  Self-loops not in ``fas`` pin their node's
    in-degree above zero and are caught like any other cycle.
    """
    for eid in fas:
        if not g.is_live(eid):
            raise ValueError(f"fas contains unknown or dead edge id {eid}")

    n = g.node_count
    in_deg = [0] * n
    out_nbrs: list[list[int]] = [[] for _ in range(n)]
    for eid, tail, head in g.edges():
        if eid in fas:
            continue
        in_deg[head] += 1
        out_nbrs[tail].append(head)

    ready = deque(u for u in range(n) if in_deg[u] == 0)
    peeled = 0
    while ready:
        u = ready.popleft()
        peeled += 1
        for v in out_nbrs[u]:
            in_deg[v] -= 1
            if in_deg[v] == 0:
                ready.append(v)
    return peeled == n


def fas_percentage(g: DirectedGraph, fas: set[EdgeId]) -> float:
    """100 * |fas| / live edge count."""
    m = g.edge_count
    if m == 0:
        raise ValueError("fas_percentage is undefined on an edgeless graph")
    for eid in fas:
        if not g.is_live(eid):
            raise ValueError(f"fas contains unknown or dead edge id {eid}")
    return 100.0 * len(fas) / m
