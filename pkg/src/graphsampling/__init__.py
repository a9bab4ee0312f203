"""Seeded node, edge and exploration samplers for undirected graphs."""

from .api import METHODS, SampleResult, SamplerSpec, TargetSize, describe, method_info, sample
from .errors import (
    DegenerateStatistic,
    EdgeListParseError,
    GenerationError,
    HarnessError,
    SamplingError,
    ValidationError,
    ValidationKind,
)
from .generators import watts_strogatz
from .graph import (
    Graph,
    Subgraph,
    graph_from_edges,
    induced_subgraph,
    pagerank,
    random_neighbor,
    shortest_path,
    validate,
)
from .io import dumps_edge_list, load_edge_list, loads_edge_list, save_edge_list
from .rng import RandomSource
from .stats import StatReport, average_degree, degree_correlation, estimate, transitivity

__version__ = "0.1.0"

__all__ = [
    "METHODS",
    "DegenerateStatistic",
    "EdgeListParseError",
    "GenerationError",
    "Graph",
    "HarnessError",
    "RandomSource",
    "SampleResult",
    "SamplerSpec",
    "SamplingError",
    "StatReport",
    "Subgraph",
    "TargetSize",
    "ValidationError",
    "ValidationKind",
    "average_degree",
    "degree_correlation",
    "describe",
    "dumps_edge_list",
    "estimate",
    "graph_from_edges",
    "induced_subgraph",
    "load_edge_list",
    "loads_edge_list",
    "method_info",
    "pagerank",
    "random_neighbor",
    "sample",
    "save_edge_list",
    "shortest_path",
    "transitivity",
    "validate",
    "watts_strogatz",
]
