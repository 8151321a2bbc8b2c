"""Serialization: edge-list text files, FAS files, and benchmark CSV.

Edge-list format: one ``tail head`` pair of base-10 nonnegative integers per
line, blank lines and lines starting with '#' ignored, node count = 1 + the
largest id mentioned.  Note the format cannot express trailing isolated
nodes (ids above every edge endpoint); graphs that have them lose those
nodes on a write/parse round trip.

FAS files reuse the edge-line syntax prefixed by a ``# size=S pct=P``
header.  Benchmark CSVs have a fixed column set plus a companion aggregate
file with per-configuration means, and all headers are byte-stable for
golden-file comparisons.
"""

from __future__ import annotations

import csv
import warnings
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from statistics import fmean
from typing import IO, Iterable

from .graph import DirectedGraph, EdgeId
from .heuristics import FasResult


class EdgeListParseError(ValueError):
    """Malformed edge-list input, carrying the 1-based line number."""

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def parse_edge_list(stream: Iterable[str]) -> DirectedGraph:
    """Parse an edge list; empty input gives the empty 0-node graph.

    Duplicate edges are dropped and reported once at the end through a
    single UserWarning carrying the duplicate count.  Self-loops are kept.
    """
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    max_id = -1
    for line_number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                line_number, f"expected 'tail head', got {len(tokens)} token(s)"
            )
        for token in tokens:
            if not (token.isascii() and token.isdigit()):
                raise EdgeListParseError(
                    line_number, f"{token!r} is not a nonnegative integer"
                )
        tail, head = int(tokens[0]), int(tokens[1])
        if (tail, head) in seen:
            duplicates += 1
            continue
        seen.add((tail, head))
        pairs.append((tail, head))
        if tail > max_id:
            max_id = tail
        if head > max_id:
            max_id = head
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge(s) ignored", stacklevel=2)
    return DirectedGraph.from_pairs(max_id + 1, pairs)


def write_edge_list(g: DirectedGraph, stream: IO[str]) -> None:
    """One ``tail head`` line per live edge, ascending edge id."""
    for _, tail, head in g.edges():
        stream.write(f"{tail} {head}\n")


def format_percentage(value: float) -> str:
    """Two decimal places, halves rounded up (12.345 -> '12.35')."""
    return str(Decimal(value).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def write_fas(fas: FasResult, g: DirectedGraph, stream: IO[str]) -> None:
    """Header with size and percentage, then edge lines sorted by edge id."""
    stream.write(f"# size={fas.size} pct={format_percentage(fas.percentage)}\n")
    for eid in sorted(fas.edges):
        tail, head = g.edge(eid)
        stream.write(f"{tail} {head}\n")


def read_fas(g: DirectedGraph, stream: Iterable[str]) -> set[EdgeId]:
    """Parse a FAS file back into edge ids of ``g``.

    Uses edge-list line syntax; each edge must exist in ``g`` (ValueError
    otherwise, since a FAS is only meaningful against its graph).
    """
    by_pair = {(tail, head): eid for eid, tail, head in g.edges()}
    ids: set[EdgeId] = set()
    for line_number, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                line_number, f"expected 'tail head', got {len(tokens)} token(s)"
            )
        for token in tokens:
            if not (token.isascii() and token.isdigit()):
                raise EdgeListParseError(
                    line_number, f"{token!r} is not a nonnegative integer"
                )
        pair = (int(tokens[0]), int(tokens[1]))
        eid = by_pair.get(pair)
        if eid is None:
            raise ValueError(f"line {line_number}: edge {pair} is not in the graph")
        ids.add(eid)
    return ids


# ---- benchmark CSV ----

BENCH_COLUMNS = [
    "algorithm",
    "n",
    "avg_out_degree",
    "back_fraction",
    "seed",
    "fas_size",
    "fas_pct",
    "elapsed_ms",
]

AGGREGATE_COLUMNS = [
    "algorithm",
    "n",
    "avg_out_degree",
    "back_fraction",
    "seeds",
    "mean_fas_size",
    "mean_fas_pct",
    "mean_elapsed_ms",
]


@dataclass
class BenchRow:
    """One heuristic run.  ``back_fraction``/``seed`` are None in file mode,
    where the input graph is loaded rather than generated."""

    algorithm: str
    n: int
    avg_out_degree: float
    back_fraction: float | None
    seed: int | None
    fas_size: int
    fas_pct: float
    elapsed_ms: float

    def config_key(self) -> tuple:
        return (self.algorithm, self.n, self.avg_out_degree, self.back_fraction)


def write_benchmark_csv(rows: list[BenchRow], stream: IO[str], aggregate_stream: IO[str]) -> None:
    """Emit the per-run CSV and the per-configuration aggregate CSV.

    A configuration is (algorithm, n, avg_out_degree, back_fraction);
    aggregate values are plain arithmetic means over its rows, which the
    harness produces one-per-seed.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.algorithm,
                row.n,
                row.avg_out_degree,
                "" if row.back_fraction is None else row.back_fraction,
                "" if row.seed is None else row.seed,
                row.fas_size,
                row.fas_pct,
                row.elapsed_ms,
            ]
        )

    agg_writer = csv.writer(aggregate_stream, lineterminator="\n")
    agg_writer.writerow(AGGREGATE_COLUMNS)
    for key, group in aggregate_rows(rows):
        algorithm, n, avg_out_degree, back_fraction = key
        agg_writer.writerow(
            [
                algorithm,
                n,
                avg_out_degree,
                "" if back_fraction is None else back_fraction,
                len(group),
                fmean(r.fas_size for r in group),
                fmean(r.fas_pct for r in group),
                fmean(r.elapsed_ms for r in group),
            ]
        )


def aggregate_rows(rows: list[BenchRow]) -> list[tuple[tuple, list[BenchRow]]]:
    """Group rows by configuration, preserving first-appearance order."""
    groups: dict[tuple, list[BenchRow]] = {}
    for row in rows:
        groups.setdefault(row.config_key(), []).append(row)
    return list(groups.items())
