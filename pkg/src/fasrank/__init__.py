"""Feedback arc set heuristics toolkit.

Compute small feedback arc sets of directed graphs with three heuristics
(greedy sink/source peeling, insertion sort of a linear arrangement, and
PageRank scoring on the line digraph), generate seeded random instances
with a planted upper bound, validate results independently, and benchmark
everything to CSV.
"""

from .bench import (
    BenchError,
    ExperimentConfig,
    load_config,
    run_experiment,
    write_outputs,
)
from .generator import GeneratorParams, InfeasibleParamsError, generate
from .graph import DirectedGraph, EdgeId, NodeId, Subgraph, full_view
from .io import (
    BenchRow,
    EdgeListParseError,
    format_percentage,
    parse_edge_list,
    read_fas,
    write_benchmark_csv,
    write_edge_list,
    write_fas,
)
from .heuristics import (
    FasResult,
    LinearArrangement,
    backward_arcs,
    greedy_fas,
    page_rank_fas,
    sort_fas,
)
from .line_digraph import CoverageError, LineDigraph, line_digraph, line_digraph_oracle
from .pagerank import pagerank
from .scc import SccDecomposition, is_acyclic, strongly_connected_components
from .verify import fas_percentage, validate_fas

__all__ = [
    "DirectedGraph",
    "Subgraph",
    "NodeId",
    "EdgeId",
    "full_view",
    "SccDecomposition",
    "strongly_connected_components",
    "is_acyclic",
    "LineDigraph",
    "CoverageError",
    "line_digraph",
    "line_digraph_oracle",
    "pagerank",
    "LinearArrangement",
    "FasResult",
    "backward_arcs",
    "greedy_fas",
    "sort_fas",
    "page_rank_fas",
    "GeneratorParams",
    "InfeasibleParamsError",
    "generate",
    "validate_fas",
    "fas_percentage",
    "EdgeListParseError",
    "parse_edge_list",
    "write_edge_list",
    "write_fas",
    "read_fas",
    "format_percentage",
    "BenchRow",
    "write_benchmark_csv",
    "BenchError",
    "ExperimentConfig",
    "load_config",
    "run_experiment",
    "write_outputs",
]

__version__ = "0.1.0"
