"""Bridgeless graph in, verified nowhere-zero 6-flow out."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import reduction, solver_one, solver_two
from .flows import FlowPair, crt_combine, to_integer_flow, verify_integer_flow, verify_pair
from .formats import format_flow
from .graph import MultiGraph

BACKENDS = ("one", "two")


@dataclass
class Solution:
    graph: MultiGraph
    backend: str
    pair: FlowPair
    phi6: dict[int, int]
    integer: dict[int, int]

    def document(self) -> str:
        return format_flow(self.pair.phi2, self.pair.phi3, self.phi6, self.integer)


def solve_leaf(leaf: reduction.Leaf, backend: str, check: bool = True) -> FlowPair:
    if leaf.kind == "small":
        return reduction.solve_small(leaf.graph)
    if backend == "one":
        return solver_one.solve_cubic(leaf.graph, check=check)
    if backend == "two":
        return solver_two.solve_cubic(leaf.graph, check=check)
    raise ValueError(f"unknown backend {backend!r}")


def _solve_leaf_args(args):
    return solve_leaf(*args)


def solve_pipeline(g: MultiGraph, backend: str = "one", check: bool = True, workers: int = 1) -> Solution:
    """Reduce, solve every leaf with ``backend``, lift, combine and convert to integers.

    ``workers > 1`` solves leaves in a process pool; the output is identical.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    trace = reduction.reduce(g)
    leaves = reduction.leaves(trace)
    jobs = [(lf, backend, check) for lf in leaves]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            sols = list(pool.map(_solve_leaf_args, jobs))
    else:
        sols = [solve_leaf(*j) for j in jobs]
    pair = reduction.lift(trace, sols)
    report = verify_pair(g, pair)
    assert report.ok, report.describe()
    phi6 = crt_combine(pair)
    integer = to_integer_flow(g, phi6) if g.m else {}
    assert verify_integer_flow(g, integer, phi6).ok
    return Solution(g, backend, pair, phi6, integer)
