"""Constructive nowhere-zero 6-flows on bridgeless multigraphs."""

from .flows import FlowPair, crt_combine, to_integer_flow, verify_pair
from .graph import GraphError, MultiGraph
from .pipeline import Solution, solve_pipeline

__all__ = [
    "FlowPair",
    "GraphError",
    "MultiGraph",
    "Solution",
    "crt_combine",
    "solve_pipeline",
    "to_integer_flow",
    "verify_pair",
]
