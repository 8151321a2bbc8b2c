"""Seeded random digraphs with a planted feedback arc set upper bound.

The construction fixes the identity order 0..n-1 as a hidden topological
order, samples ``m - b`` distinct forward pairs (i < j) and ``b`` distinct
backward pairs (i > j) uniformly without replacement, then relabels the nodes
with a seeded shuffle so the planted order is not the visible id order.
Stripping the ``b`` planted back edges leaves a DAG, so the minimum FAS is at
most ``b`` — the fraction of back edges upper-bounds the attainable FAS
percentage.

Reproducibility contract: everything is driven by one ``random.Random(seed)``
stream (CPython's Mersenne Twister) in a fixed draw order — forward ranks,
then backward ranks, then the shuffle — with the sampling and shuffling
procedures spelled out in this file, so identical params give bit-identical
edge lists anywhere the generator is faithfully reimplemented.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt

from .graph import DirectedGraph, EdgeId


class InfeasibleParamsError(ValueError):
    """The requested edge quotas exceed what n nodes can host."""


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    avg_out_degree: float
    back_fraction: float
    seed: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.avg_out_degree < 0:
            raise ValueError(f"avg_out_degree must be >= 0, got {self.avg_out_degree}")
        if not 0.0 <= self.back_fraction <= 1.0:
            raise ValueError(f"back_fraction must be in [0, 1], got {self.back_fraction}")


def _round_half_up(x: float) -> int:
    # round() would round halves to even; half-up keeps the edge budget
    # predictable and portable.
    return int(x + 0.5)


def generate(p: GeneratorParams) -> tuple[DirectedGraph, set[EdgeId]]:
    """Build the graph for ``p``; returns it with the planted back-edge ids.

    Edge ids 0..m-b-1 are the forward edges in ascending rank order and
    m-b..m-1 the planted back edges, so the planted set is always the tail
    of the id range.
    """
    n = p.n
    m = _round_half_up(n * p.avg_out_degree)
    b = _round_half_up(p.back_fraction * m)
    capacity = n * (n - 1) // 2
    if m - b > capacity:
        raise InfeasibleParamsError(
            f"{m - b} forward edges requested but only {capacity} pairs i<j exist for n={n}"
        )
    if b > capacity:
        raise InfeasibleParamsError(
            f"{b} back edges requested but only {capacity} pairs i>j exist for n={n}"
        )

    rng = random.Random(p.seed)
    forward_ranks = _sample_without_replacement(rng, capacity, m - b)
    backward_ranks = _sample_without_replacement(rng, capacity, b)
    perm = _shuffled_identity(rng, n)

    pairs: list[tuple[int, int]] = []
    for r in forward_ranks:
        i, j = _unrank_pair(r, n)
        pairs.append((perm[i], perm[j]))
    for r in backward_ranks:
        i, j = _unrank_pair(r, n)
        pairs.append((perm[j], perm[i]))

    g = DirectedGraph.from_pairs(n, pairs)
    planted = set(range(m - b, m))
    return g, planted


def _sample_without_replacement(rng: random.Random, population: int, k: int) -> list[int]:
    """k distinct integers from [0, population), returned sorted ascending.

    Straight rejection sampling: draw until k distinct values accumulate.
    The draw sequence (and hence the result) is a pure function of the
    generator state.
    """
    chosen: set[int] = set()
    while len(chosen) < k:
        r = rng.randrange(population)
        if r not in chosen:
            chosen.add(r)
    return sorted(chosen)

def _shuffled_identity(rng: random.Random, n: int) -> list[int]:
    """Fisher-Yates from the top, one randrange(i+1) draw per position."""
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.randrange(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def _unrank_pair(rank: int, n: int) -> tuple[int, int]:
    """The rank-th pair (i, j) with i < j in lexicographic order.

    Pairs with first element i occupy a block of size n-1-i starting at
    offset(i) = i*(2n-i-1)/2; the block index comes from inverting that
    quadratic with integer arithmetic.
    """
    # Solve i*(2n-i-1)/2 <= rank for the largest i.
    disc = (2 * n - 1) * (2 * n - 1) - 8 * rank
    i = (2 * n - 1 - (isqrt(disc) + 1)) // 2

    def offset(i_: int) -> int:
        return i_ * (2 * n - i_ - 1) // 2

    while offset(i + 1) <= rank:
        i += 1
    while i > 0 and offset(i) > rank:
        i -= 1
    j = i + 1 + (rank - offset(i))
    return i, j
