"""Reduce a bridgeless graph to 3-edge-connected cubic pieces and lift flows back.

At each node the first applicable rule wins: at most two vertices is a base
case; a cut vertex splits the graph into two edge-disjoint sides; a 2-edge-cut
is removed by contracting one of its edges; a vertex of degree k > 3 is blown
up into a k-cycle. What remains is cubic and 3-edge-connected.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import _stack
from .cuts import cut_vertices, is_k_edge_connected, series_classes
from .flows import FlowPair, solve_edge_value, verify_pair
from .graph import GraphError, MultiGraph, is_cubic


class ReductionError(ValueError):
    pass


@dataclass
class Leaf:
    graph: MultiGraph
    kind: str  # "cubic" or "small"


@dataclass
class SplitAtCutVertex:
    graph: MultiGraph
    vertex: int
    sides: tuple[MultiGraph, MultiGraph]
    children: list = field(default_factory=list)


@dataclass
class ContractTwoCut:
    graph: MultiGraph
    edge: int
    partner: int
    child: object = None


@dataclass
class ExpandVertex:
    graph: MultiGraph
    vertex: int
    cycle_vertices: tuple[int, ...]
    attach: dict[int, int]  # original edge -> cycle vertex it now ends at
    cycle_edges: tuple[int, ...]
    child: object = None


Node = Leaf | SplitAtCutVertex | ContractTwoCut | ExpandVertex


def split_at(g: MultiGraph, v: int) -> tuple[MultiGraph, MultiGraph]:
    """Two nontrivial edge-disjoint subgraphs sharing only ``v``."""
    comps = g.delete_vertex(v).components()
    if len(comps) < 2:
        raise ReductionError(f"{v} is not a cut vertex")
    first = comps[0] | {v}
    rest = frozenset(g.vertices) - comps[0]
    return g.subgraph(first), g.subgraph(rest)


def expand_vertex(g: MultiGraph, v: int):
    """Replace ``v`` of degree k by a k-cycle; edge i (by id) moves to the i-th cycle vertex."""
    inc = g.incident(v)
    k = len(inc)
    h = g
    cyc = []
    for _ in range(k):
        h, x = h.add_vertex()
        cyc.append(x)
    attach = dict(zip(inc, cyc))
    edges = h.edges
    for e, x in attach.items():
        t, hd = edges[e]
        edges[e] = (x, hd) if t == v else (t, x)
    h = MultiGraph(
        [y for y in h.vertices if y != v], edges, next_vertex=h.next_vertex, next_edge=h.next_edge
    )
    cycle_edges = []
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        h, e = h.add_edge(a, b)
        cycle_edges.append(e)
    return h, tuple(cyc), attach, tuple(cycle_edges)


def _reduce_step(g: MultiGraph):
    if g.n <= 2:
        return Leaf(g, "small")
    cvs = cut_vertices(g)
    if cvs:
        v = min(cvs)
        node = SplitAtCutVertex(g, v, split_at(g, v))
        for side in node.sides:
            node.children.append((yield side))
        return node
    cuts = [tuple(sorted(c)[:2]) for c in series_classes(g) if len(c) >= 2]
    if cuts:
        e, partner = min(cuts)
        h, emap, _ = g.contract_edge(e)
        if emap[partner] is None:
            raise ReductionError(f"contracting {e} also removed {partner}")
        node = ContractTwoCut(g, e, partner)
        node.child = yield h
        return node
    big = [v for v in g.vertices if g.degree(v) > 3]
    if big:
        v = big[0]
        h, cyc, attach, cedges = expand_vertex(g, v)
        if not is_k_edge_connected(h, 3):
            raise ReductionError(f"expanding {v} did not give a 3-edge-connected graph")
        node = ExpandVertex(g, v, cyc, attach, cedges)
        node.child = yield h
        return node
    if not (is_cubic(g) and is_k_edge_connected(g, 3)):
        raise ReductionError("leaf is not cubic and 3-edge-connected")
    return Leaf(g, "cubic")


def reduce(g: MultiGraph) -> Node:
    """Reduction tree of a 2-edge-connected graph."""
    if not g.is_connected():
        raise GraphError("graph is disconnected")
    if not is_k_edge_connected(g, 2):
        raise GraphError("graph has a bridge")
    return _stack.run(_reduce_step, g)


def leaves(node: Node) -> list[Leaf]:
    """Leaves in left-to-right order; this is the order :func:`lift` consumes solutions."""
    out = []
    stack = [node]
    while stack:
        x = stack.pop()
        if isinstance(x, Leaf):
            out.append(x)
        elif isinstance(x, SplitAtCutVertex):
            stack.extend(reversed(x.children))
        else:
            stack.append(x.child)
    return out


def solve_small(g: MultiGraph) -> FlowPair:
    """Nowhere-zero pair on a bridgeless graph with at most two vertices."""
    if g.n <= 1:
        return FlowPair({}, {})
    if g.n != 2 or g.m < 2:
        raise ReductionError("small base needs two vertices joined by at least two edges")
    v = g.vertices[0]
    es = g.edge_ids
    # values read in the direction leaving v; even m: all 3, odd m: 1, 2, 3, then 3s
    want = [3] * len(es) if len(es) % 2 == 0 else [1, 2] + [3] * (len(es) - 2)
    phi6 = {e: (g.sign(e, v) * x) % 6 for e, x in zip(es, want)}
    return FlowPair.from_z6(phi6)


def lift(node: Node, solutions) -> FlowPair:
    """Pull leaf solutions (in :func:`leaves` order) back to the root graph."""
    it = iter(solutions)

    def lift_step(x):
        if isinstance(x, Leaf):
            sol = next(it)
            report = verify_pair(x.graph, sol)
            if not report.ok:
                raise ReductionError(f"leaf solution does not verify: {report.describe()}")
            return sol.restrict(x.graph.edge_ids)
        if isinstance(x, SplitAtCutVertex):
            parts = []
            for child in x.children:
                parts.append((yield child))
            phi2, phi3 = {}, {}
            for p in parts:
                phi2.update(p.phi2)
                phi3.update(p.phi3)
            return FlowPair(phi2, phi3)
        if isinstance(x, ContractTwoCut):
            sol = yield x.child
            g, e = x.graph, x.edge
            phi2, phi3 = dict(sol.phi2), dict(sol.phi3)
            t = g.tail(e)
            phi2[e] = solve_edge_value(g, phi2, e, t, 0, 2)
            phi3[e] = solve_edge_value(g, phi3, e, t, 0, 3)
            assert (phi2[e], phi3[e]) == (phi2[x.partner], phi3[x.partner]) or (
                phi2[e] == phi2[x.partner] and phi3[e] == (-phi3[x.partner]) % 3
            ), "reinstated edge is not ± its cut partner"
            return FlowPair(phi2, phi3)
        if isinstance(x, ExpandVertex):
            sol = yield x.child
            return sol.restrict(x.graph.edge_ids)
        raise TypeError(x)

    pair = _stack.run(lift_step, node)
    report = verify_pair(node.graph, pair)
    if not report.ok:
        raise ReductionError(f"lifted pair does not verify: {report.describe()}")
    return pair


def summary(node: Node) -> dict:
    """Step counts by kind and (n, m) of each leaf."""
    steps: Counter = Counter()
    stack = [node]
    while stack:
        x = stack.pop()
        steps[type(x).__name__] += 1
        if isinstance(x, SplitAtCutVertex):
            stack.extend(x.children)
        elif not isinstance(x, Leaf):
            stack.append(x.child)
    del steps["Leaf"]
    return {
        "steps": dict(sorted(steps.items())),
        "leaves": [(lf.kind, lf.graph.n, lf.graph.m) for lf in leaves(node)],
    }
