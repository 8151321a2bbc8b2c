"""Undamped PageRank with a fixed sweep count.

Scores start uniform at 1/n and are updated synchronously (two buffers, no
in-place mixing):

    new[v] = sum(old[u] / outdeg(u) for u in in-neighbours of v)
           + (old[v] if v has no out-edges else 0)

Sink nodes keep their mass, so the total stays at 1 up to float error.  There
is no damping factor and no convergence test: exactly ``sweeps`` updates run,
and ``sweeps=0`` returns the uniform vector.  A handful of sweeps is all the
downstream edge ranking needs.

Per-target contributions accumulate in ascending source-node order, so a
given graph always produces bit-identical scores.
"""

from __future__ import annotations

import numpy as np

from .graph import DirectedGraph


def pagerank(g: DirectedGraph, sweeps: int) -> np.ndarray:
    """Score vector after ``sweeps`` synchronous updates.  O(sweeps * m)."""
    n = g.node_count
    if n == 0:
        raise ValueError("pagerank needs a nonempty graph")
    if sweeps < 0:
        raise ValueError(f"sweeps must be >= 0, got {sweeps}")

    scores = np.full(n, 1.0 / n)
    if sweeps == 0:
        return scores

    if g.edge_count == len(g._tails):          # no tombstones: take arrays whole
        tails = np.array(g._tails, dtype=np.intp)
        heads = np.array(g._heads, dtype=np.intp)
    else:
        live = [(t, h) for _, t, h in g.edges()]
        tails = np.array([t for t, _ in live], dtype=np.intp)
        heads = np.array([h for _, h in live], dtype=np.intp)
    if tails.size:
        order = np.lexsort((tails, heads))     # by target, then by source
        tails = tails[order]
        heads = heads[order]
    out_degree = np.bincount(tails, minlength=n)
    sinks = np.flatnonzero(out_degree == 0)
    out_degree_f = out_degree.astype(np.float64)

    for _ in range(sweeps):
        new = np.zeros(n)
        if tails.size:
            np.add.at(new, heads, scores[tails] / out_degree_f[tails])
        if sinks.size:
            new[sinks] += scores[sinks]
        scores = new
    return scores
