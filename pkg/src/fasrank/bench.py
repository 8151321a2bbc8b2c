"""Benchmark harness: sweep one axis, average over seeds, emit CSV.

Four experiment kinds cover the usual comparisons: growing node counts,
growing planted back-edge fractions, growing average out-degree, and a list
of on-disk edge-list files.  Every run is validated, so a heuristic
returning a broken FAS aborts the whole experiment instead of polluting the
numbers.

Runs are independent, so the harness can fan them out over a process pool;
rows are sorted by (sweep point, seed, algorithm) before writing regardless
of completion order.  The FASRANK_WORKERS environment variable overrides any
configured worker count.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .generator import GeneratorParams, generate
from .graph import DirectedGraph
from .heuristics import FasResult, greedy_fas, page_rank_fas, sort_fas
from .io import BenchRow, parse_edge_list, write_benchmark_csv
from .verify import validate_fas

WORKERS_ENV_VAR = "FASRANK_WORKERS"

EXPERIMENTS = ("nodes", "back_fractions", "degrees", "files")
ALGORITHMS = ("greedy", "sort", "pagerank")

# Desk-scale node sweep; full scale extends to the sizes where a single
# pagerank run takes seconds rather than milliseconds.
DESK_NODE_SWEEP = (100, 200, 400, 1000)
FULL_NODE_SWEEP = (100, 200, 400, 1000, 2000, 4000)


class BenchError(RuntimeError):
    """Experiment aborted: invalid FAS or unusable input."""


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str                       # one of EXPERIMENTS
    values: tuple = ()                    # swept values, or file paths for "files"
    n: int = 150
    avg_out_degree: float = 3.0
    back_fraction: float = 0.2
    seeds_per_point: int = 10
    base_seed: int = 1
    algorithms: tuple[str, ...] = ALGORITHMS
    pagerank_iterations: int = 5

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"experiment must be one of {EXPERIMENTS}, got {self.experiment!r}")
        if not self.values:
            raise ValueError("values must be a nonempty sweep list")
        if self.seeds_per_point < 1:
            raise ValueError("seeds_per_point must be >= 1")
        if not self.algorithms:
            raise ValueError("at least one algorithm must be selected")
        for name in self.algorithms:
            if name not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {name!r}; choose from {ALGORITHMS}")
        if self.pagerank_iterations < 0:
            raise ValueError("pagerank_iterations must be >= 0")

    def seeds(self) -> list[int]:
        """seed_i = base_seed + i, shared by every sweep point."""
        return [self.base_seed + i for i in range(self.seeds_per_point)]


def load_config(path: str | Path) -> ExperimentConfig:
    """Read an ExperimentConfig from a flat JSON object.

    Keys are the ExperimentConfig field names; "values" and "algorithms"
    are arrays.  Unknown keys are rejected to catch typos.
    """
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must contain a JSON object")
    known = set(ExperimentConfig.__dataclass_fields__)
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config key(s): {sorted(unknown)}")
    if "values" in data:
        data["values"] = tuple(data["values"])
    if "algorithms" in data:
        data["algorithms"] = tuple(data["algorithms"])
    return ExperimentConfig(**data)


def _run_heuristic(name: str, g: DirectedGraph, pagerank_iterations: int) -> FasResult:
    if name == "greedy":
        return greedy_fas(g)[1]
    if name == "sort":
        return sort_fas(g)[1]
    if name == "pagerank":
        return page_rank_fas(g, pagerank_iterations)
    raise ValueError(f"unknown algorithm {name!r}")


def _run_task(cfg: ExperimentConfig, value, seed: int | None, algorithm: str) -> BenchRow:
    """One (sweep point, seed, algorithm) run: build the instance, run,
    validate, and describe it as a row.  Timing covers the heuristic only."""
    if cfg.experiment == "files":
        path = Path(value)
        try:
            with open(path, encoding="utf-8") as fh:
                g = parse_edge_list(fh)
        except OSError as exc:
            raise BenchError(f"cannot read {path}: {exc}") from exc
        n = g.node_count
        avg_out_degree = round(g.edge_count / n, 4) if n else 0.0
        back_fraction = None
    else:
        n = cfg.n
        avg_out_degree = cfg.avg_out_degree
        back_fraction = cfg.back_fraction
        if cfg.experiment == "nodes":
            n = int(value)
        elif cfg.experiment == "degrees":
            avg_out_degree = float(value)
        elif cfg.experiment == "back_fractions":
            back_fraction = float(value)
        g, _ = generate(GeneratorParams(n, avg_out_degree, back_fraction, seed))

    result = _run_heuristic(algorithm, g, cfg.pagerank_iterations)
    if not validate_fas(g, result.edges):
        instance = value if cfg.experiment == "files" else f"seed {seed}"
        raise BenchError(f"{algorithm} produced an invalid FAS ({instance}) — aborting")
    return BenchRow(
        algorithm=algorithm,
        n=n,
        avg_out_degree=avg_out_degree,
        back_fraction=back_fraction,
        seed=seed,
        fas_size=result.size,
        fas_pct=result.percentage,
        elapsed_ms=result.elapsed * 1000.0,
    )


def resolve_workers(requested: int | None) -> int:
    """Worker count for run_experiment; FASRANK_WORKERS wins over config."""
    env = os.environ.get(WORKERS_ENV_VAR)
    if env is not None:
        count = int(env)
        if count < 1:
            raise ValueError(f"{WORKERS_ENV_VAR} must be >= 1, got {env}")
        return count
    return max(1, requested or 1)


def run_experiment(cfg: ExperimentConfig, workers: int | None = None) -> list[BenchRow]:
    """Execute every (sweep point, seed, algorithm) combination.

    Generated experiments run seeds base_seed..base_seed+seeds_per_point-1
    at every sweep point.  File mode runs each file once per algorithm —
    the heuristics are deterministic, so repeated seeds would only repeat
    rows.  Rows come back sorted by (point, seed, algorithm name).
    """
    tasks = []
    for point_index, value in enumerate(cfg.values):
        seeds: list[int | None] = [None] if cfg.experiment == "files" else cfg.seeds()
        for seed in seeds:
            for algorithm in cfg.algorithms:
                tasks.append((point_index, value, seed, algorithm))

    worker_count = resolve_workers(workers)
    if worker_count == 1:
        rows = [_run_task(cfg, value, seed, algorithm) for _, value, seed, algorithm in tasks]
    else:
        with ProcessPoolExecutor(max_workers=worker_count) as pool:
            futures = [
                pool.submit(_run_task, cfg, value, seed, algorithm)
                for _, value, seed, algorithm in tasks
            ]
            rows = [future.result() for future in futures]

    keyed = sorted(
        zip(tasks, rows),
        key=lambda pair: (pair[0][0], pair[0][2] if pair[0][2] is not None else -1, pair[0][3]),
    )
    return [row for _, row in keyed]


def write_outputs(rows: list[BenchRow], output_dir: str | Path) -> tuple[Path, Path]:
    """Write runs.csv and aggregate.csv under ``output_dir``."""
    directory = Path(output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    runs_path = directory / "runs.csv"
    aggregate_path = directory / "aggregate.csv"
    with open(runs_path, "w", encoding="utf-8") as runs_fh, open(
        aggregate_path, "w", encoding="utf-8"
    ) as agg_fh:
        write_benchmark_csv(rows, runs_fh, agg_fh)
    return runs_path, aggregate_path
