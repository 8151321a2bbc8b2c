"""Command-line front end: generate / run / verify / bench.

Exit codes: 0 success, 1 invalid FAS (verify), 2 usage error, 3 I/O or
parse error, 4 infeasible generation parameters.  Diagnostics go to stderr;
stdout carries only machine-readable results (the ``run`` summary lines).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .generator import GeneratorParams, InfeasibleParamsError, generate
from .heuristics import FasResult, greedy_fas, page_rank_fas, sort_fas
from .io import (
    EdgeListParseError,
    format_percentage,
    parse_edge_list,
    read_fas,
    write_edge_list,
    write_fas,
)
from .verify import validate_fas

EXIT_OK = 0
EXIT_INVALID_FAS = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INFEASIBLE = 4

RUN_ALGORITHM_ORDER = ("greedy", "sort", "pagerank")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fasrank",
        description="Feedback arc set heuristics: generate graphs, compute and "
        "verify arc sets, and benchmark the algorithms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a random graph with planted back edges")
    gen.add_argument("--n", type=int, required=True, help="node count")
    gen.add_argument("--avg-out-degree", type=float, required=True)
    gen.add_argument("--back-fraction", type=float, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", required=True, help="edge-list output path")
    gen.add_argument(
        "--planted",
        help="planted back-edge sidecar path (default: OUTPUT.planted)",
    )

    run = sub.add_parser("run", help="compute a FAS for an edge-list file")
    run.add_argument("input", help="edge-list path")
    run.add_argument(
        "--algorithm",
        choices=RUN_ALGORITHM_ORDER,
        default="pagerank",
    )
    run.add_argument("--iterations", type=int, default=5, help="pagerank sweeps (default 5)")
    run.add_argument(
        "--all",
        action="store_true",
        help="run all three heuristics and print one summary line each",
    )
    run.add_argument("-o", "--output", help="FAS file path (omit to skip the file)")

    ver = sub.add_parser("verify", help="check a FAS file against its graph")
    ver.add_argument("graph", help="edge-list path")
    ver.add_argument("fas", help="FAS file path")

    ben = sub.add_parser("bench", help="run an experiment sweep and write CSVs")
    ben.add_argument("--config", help="JSON config file (overrides sweep flags)")
    ben.add_argument("--experiment", choices=bench.EXPERIMENTS)
    ben.add_argument(
        "--values",
        help="comma-separated sweep values (numbers, or paths for files mode)",
    )
    ben.add_argument("--n", type=int, default=150)
    ben.add_argument("--avg-out-degree", type=float, default=3.0)
    ben.add_argument("--back-fraction", type=float, default=0.2)
    ben.add_argument("--seeds", type=int, default=10)
    ben.add_argument("--base-seed", type=int, default=1)
    ben.add_argument(
        "--algorithms",
        default=",".join(bench.ALGORITHMS),
        help="comma-separated subset of greedy,sort,pagerank",
    )
    ben.add_argument("--iterations", type=int, default=5)
    ben.add_argument(
        "--full-scale",
        action="store_true",
        help="with --experiment nodes and no --values, sweep to 4000 nodes",
    )
    ben.add_argument("--workers", type=int, default=1)
    ben.add_argument("-o", "--output-dir", required=True)

    return parser


def _summary_line(name: str, result: FasResult) -> str:
    return f"{name} {result.size} {format_percentage(result.percentage)} {result.elapsed * 1000.0:.3f}"


def _load_graph(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def _cmd_generate(args) -> int:
    params = GeneratorParams(args.n, args.avg_out_degree, args.back_fraction, args.seed)
    graph, planted = generate(params)
    out_path = Path(args.output)
    planted_path = Path(args.planted) if args.planted else Path(args.output + ".planted")
    with open(out_path, "w", encoding="utf-8") as fh:
        write_edge_list(graph, fh)
    with open(planted_path, "w", encoding="utf-8") as fh:
        fh.write(f"# planted back edges: {len(planted)} of {graph.edge_count}\n")
        for eid in sorted(planted):
            tail, head = graph.edge(eid)
            fh.write(f"{tail} {head}\n")
    print(
        f"wrote {graph.node_count} nodes, {graph.edge_count} edges to {out_path}; "
        f"{len(planted)} planted back edges to {planted_path}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_run(args) -> int:
    if args.all and args.output:
        print("--all cannot be combined with --output", file=sys.stderr)
        return EXIT_USAGE
    graph = _load_graph(args.input)
    names = RUN_ALGORITHM_ORDER if args.all else (args.algorithm,)
    for name in names:
        if name == "greedy":
            result = greedy_fas(graph)[1]
        elif name == "sort":
            result = sort_fas(graph)[1]
        else:
            result = page_rank_fas(graph, args.iterations)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                write_fas(result, graph, fh)
        print(_summary_line(name, result))
    return EXIT_OK


def _cmd_verify(args) -> int:
    graph = _load_graph(args.graph)
    try:
        with open(args.fas, encoding="utf-8") as fh:
            fas = read_fas(graph, fh)
    except EdgeListParseError:
        raise
    except ValueError as exc:      # edge not present in the graph
        print(f"invalid FAS: {exc}", file=sys.stderr)
        return EXIT_INVALID_FAS
    if validate_fas(graph, fas):
        print("valid", file=sys.stderr)
        return EXIT_OK
    print("invalid FAS: cycles remain after removal", file=sys.stderr)
    return EXIT_INVALID_FAS


def _parse_bench_values(args) -> tuple:
    if args.values:
        raw = [item for item in args.values.split(",") if item]
        if args.experiment == "files":
            return tuple(raw)
        if args.experiment == "nodes":
            return tuple(int(item) for item in raw)
        return tuple(float(item) for item in raw)
    if args.experiment == "nodes":
        return tuple(bench.FULL_NODE_SWEEP if args.full_scale else bench.DESK_NODE_SWEEP)
    raise ValueError("--values is required for this experiment")


def _cmd_bench(args) -> int:
    if args.config:
        cfg = bench.load_config(args.config)
    else:
        if not args.experiment:
            print("either --config or --experiment is required", file=sys.stderr)
            return EXIT_USAGE
        cfg = bench.ExperimentConfig(
            experiment=args.experiment,
            values=_parse_bench_values(args),
            n=args.n,
            avg_out_degree=args.avg_out_degree,
            back_fraction=args.back_fraction,
            seeds_per_point=args.seeds,
            base_seed=args.base_seed,
            algorithms=tuple(name for name in args.algorithms.split(",") if name),
            pagerank_iterations=args.iterations,
        )
    rows = bench.run_experiment(cfg, workers=args.workers)
    runs_path, aggregate_path = bench.write_outputs(rows, args.output_dir)
    print(f"wrote {len(rows)} rows to {runs_path} and aggregates to {aggregate_path}", file=sys.stderr)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:      # argparse exits 2 on usage errors
        return int(exc.code or 0)

    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "bench":
            return _cmd_bench(args)
        raise AssertionError(f"unhandled command {args.command}")
    except InfeasibleParamsError as exc:
        print(f"infeasible parameters: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except EdgeListParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, bench.BenchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
