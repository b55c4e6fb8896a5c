"""Boundary-prescribed recursion on subcubic graphs with a degree-2 root.

Instead of flows the recursion works with arbitrary edge functions and a
prescribed Z3 boundary ``mu`` that lives on degree-2 vertices. Given a
2-edge-connected subcubic graph, a degree-2 root u, ``mu`` summing to 0 and
prescriptions ψ2, ψ3 on the two root edges, it returns φ2, φ3 extending them
with ∂φ3 = mu, ∂φ2(v) = 0 wherever mu(v) = 0, and (φ2, φ3) nonzero on every
edge. Every case removes at least one edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from . import _stack
from .cuts import is_k_edge_connected, quotient_cycle_order, series_classes
from .flows import FlowPair, boundary, boundary_at, solve_edge_value
from .graph import MultiGraph
from .solver_one import HypothesisError


class Case(Enum):
    BASE_2CYCLE = "Base2Cycle"
    SUPPRESS_DEG2_ZERO = "SuppressDeg2Zero"
    BASE_3CYCLE = "Base3Cycle"
    SPLIT_TWO_CUT = "SplitNontrivialTwoCut"
    DELETE_DEG2_NONZERO = "DeleteDeg2Nonzero"
    DELETE_INTERIOR_EDGE = "DeleteInteriorEdge"


# (τ(vw1), τ(vw2)) with both edges read as leaving v: smallest nonzero pair summing to mu(v)
TAU = {0: (1, 2), 1: (2, 2), 2: (1, 1)}


@dataclass(frozen=True)
class RootedInstanceTwo:
    graph: MultiGraph
    root: int
    mu: dict[int, int] = field(default_factory=dict)  # missing vertices mean 0
    psi2: dict[int, int] = field(default_factory=dict)  # on δ(root)
    psi3: dict[int, int] = field(default_factory=dict)

    def mu_at(self, v) -> int:
        return self.mu.get(v, 0) % 3

    def check(self):
        g, u = self.graph, self.root
        if g.degree(u) != 2:
            raise HypothesisError("root must have degree 2")
        if any(g.degree(v) > 3 for v in g.vertices):
            raise HypothesisError("graph is not subcubic")
        if not is_k_edge_connected(g, 2):
            raise HypothesisError("graph is not 2-edge-connected")
        du = set(g.incident(u))
        if set(self.psi2) != du or set(self.psi3) != du:
            raise HypothesisError("psi2 and psi3 must be defined exactly on the root edges")
        if not set(self.mu) <= set(g.vertices):
            raise HypothesisError("mu is defined on unknown vertices")
        if sum(self.mu.values()) % 3:
            raise HypothesisError("(i) mu does not sum to 0")
        off = [v for v in g.vertices if self.mu_at(v) and g.degree(v) != 2]
        if off:
            raise HypothesisError(f"(ii) mu is nonzero at vertices {off} not of degree 2")
        if boundary_at(g, self.psi3, u, 3) != self.mu_at(u):
            raise HypothesisError("(iii) boundary of psi3 at the root differs from mu")
        if self.mu_at(u) == 0 and boundary_at(g, self.psi2, u, 2):
            raise HypothesisError("(iv) psi2 is not conserved at the root although mu vanishes there")
        zero = [e for e in du if self.psi2[e] % 2 == 0 and self.psi3[e] % 3 == 0]
        if zero:
            raise HypothesisError(f"(v) prescription is (0, 0) on root edges {zero}")


def conclusions_hold(inst: RootedInstanceTwo, pair: FlowPair) -> list[str]:
    """Names of the lemma conclusions that ``pair`` violates (empty if none)."""
    g = inst.graph
    bad = []
    if set(pair.phi2) != set(g.edge_ids) or set(pair.phi3) != set(g.edge_ids):
        return ["functions are not total"]
    if any(pair.phi2[e] != inst.psi2[e] % 2 or pair.phi3[e] != inst.psi3[e] % 3 for e in inst.psi2):
        bad.append("(1) restriction to the root edges")
    b3 = boundary(g, pair.phi3, 3)
    if any(b3[v] != inst.mu_at(v) for v in g.vertices):
        bad.append("(2) boundary of phi3 equals mu")
    b2 = boundary(g, pair.phi2, 2)
    if any(b2[v] and not inst.mu_at(v) for v in g.vertices):
        bad.append("(3) phi2 conserved where mu vanishes")
    if any(pair.phi2[e] == 0 and pair.phi3[e] == 0 for e in g.edge_ids):
        bad.append("(4) nowhere-zero pair")
    return bad


def _is_cycle(g: MultiGraph, length: int) -> bool:
    return g.n == length and g.m == length and all(g.degree(v) == 2 for v in g.vertices) and g.is_connected()


def _nontrivial_two_cut(g: MultiGraph):
    """First 2-edge-cut whose sides both have at least two vertices, or None."""
    for cls in series_classes(g):
        if len(cls) < 2:
            continue
        order = quotient_cycle_order(g, cls)
        sizes = [len(c) for c in order.components]
        total = sum(sizes)
        pos = {f: k for k, f in enumerate(order.links)}
        for a, b in combinations(sorted(cls), 2):
            lo, hi = sorted((pos[a], pos[b]))
            side = sum(sizes[lo + 1 : hi + 1])
            if side >= 2 and total - side >= 2:
                arc = frozenset().union(*order.components[lo + 1 : hi + 1])
                return (a, b), arc
    return None


def case_dispatch(inst: RootedInstanceTwo):
    """The first applicable case, with whatever the case needs to proceed."""
    g, u = inst.graph, inst.root
    if _is_cycle(g, 2):
        return Case.BASE_2CYCLE, None
    deg2 = [v for v in g.vertices if v != u and g.degree(v) == 2]
    for v in deg2:
        if inst.mu_at(v) == 0:
            e = min(e for e in g.incident(v) if u not in g.ends(e))
            return Case.SUPPRESS_DEG2_ZERO, (v, e)
    if _is_cycle(g, 3):
        return Case.BASE_3CYCLE, None
    cut = _nontrivial_two_cut(g)
    if cut is not None:
        return Case.SPLIT_TWO_CUT, cut
    if deg2:
        return Case.DELETE_DEG2_NONZERO, deg2[0]
    e = min(e for e in g.edge_ids if u not in g.ends(e))
    return Case.DELETE_INTERIOR_EDGE, e


def _step(inst: RootedInstanceTwo, check: bool, observer):
    if check:
        inst.check()
    g, u = inst.graph, inst.root
    case, data = case_dispatch(inst)
    if observer is not None:
        observer(inst, case)

    if case is Case.BASE_2CYCLE:
        return FlowPair(inst.psi2, inst.psi3)

    if case is Case.SUPPRESS_DEG2_ZERO:
        v, e = data
        w = g.other_end(e, v)
        h, emap, vmap = g.contract_edge(e)
        assert sum(x is None for x in emap.values()) == 1, "suppressed vertex has a parallel pair"
        mu = {x: y for x, y in inst.mu.items() if x not in (v, w)}
        mu[vmap[v]] = (inst.mu_at(v) + inst.mu_at(w)) % 3
        sol = yield RootedInstanceTwo(h, u, mu, inst.psi2, inst.psi3)
        phi2, phi3 = dict(sol.phi2), dict(sol.phi3)
        phi2[e] = solve_edge_value(g, phi2, e, v, 0, 2)
        phi3[e] = solve_edge_value(g, phi3, e, v, 0, 3)
        return FlowPair(phi2, phi3)

    if case is Case.BASE_3CYCLE:
        vw = next(e for e in g.edge_ids if u not in g.ends(e))
        v, _ = g.ends(vw)
        assert inst.mu_at(v) and inst.mu_at(g.other_end(vw, v))
        phi2, phi3 = dict(inst.psi2), dict(inst.psi3)
        phi3[vw] = solve_edge_value(g, phi3, vw, v, inst.mu_at(v), 3)
        phi2[vw] = 1
        return FlowPair(phi2, phi3)

    if case is Case.SPLIT_TWO_CUT:
        S, arc = data
        X1 = arc if u not in arc else frozenset(g.vertices) - arc
        X2 = frozenset(g.vertices) - X1
        g1, _, vm1 = g.identify([sorted(X1)])
        x1 = vm1[min(X1)]
        g2, _, vm2 = g.identify([sorted(X2)])
        x2 = vm2[min(X2)]
        mu1 = {x: y for x, y in inst.mu.items() if x in X2}
        mu1[x1] = sum(inst.mu_at(x) for x in X1) % 3
        mu2 = {x: y for x, y in inst.mu.items() if x in X1}
        mu2[x2] = sum(inst.mu_at(x) for x in X2) % 3
        assert (mu2[x2] + mu1[x1]) % 3 == 0
        sol1 = yield RootedInstanceTwo(g1, u, mu1, inst.psi2, inst.psi3)
        sub2 = RootedInstanceTwo(
            g2, x2, mu2, {e: sol1.phi2[e] for e in S}, {e: sol1.phi3[e] for e in S}
        )
        sol2 = yield sub2
        phi2, phi3 = dict(sol1.phi2), dict(sol1.phi3)
        for e in sol2.phi2:
            if e in phi2:
                assert phi2[e] == sol2.phi2[e] and phi3[e] == sol2.phi3[e]
            phi2[e] = sol2.phi2[e]
            phi3[e] = sol2.phi3[e]
        return FlowPair(phi2, phi3)

    if case is Case.DELETE_DEG2_NONZERO:
        v = data
        a1, a2 = g.incident(v)
        w1, w2 = g.other_end(a1, v), g.other_end(a2, v)
        assert u not in (w1, w2) and w1 != w2
        t1, t2 = TAU[inst.mu_at(v)]
        # stored values: negate where the edge points into v
        tau = {a1: (g.sign(a1, v) * t1) % 3, a2: (g.sign(a2, v) * t2) % 3}
        h = g.delete_vertex(v)
        assert is_k_edge_connected(h, 2), "G - v is not 2-edge-connected"
        mu = {x: y for x, y in inst.mu.items() if x != v}
        for a, w in ((a1, w1), (a2, w2)):
            mu[w] = (inst.mu_at(w) - g.sign(a, w) * tau[a]) % 3
        sol = yield RootedInstanceTwo(h, u, mu, inst.psi2, inst.psi3)
        phi2, phi3 = dict(sol.phi2), dict(sol.phi3)
        for a, w in ((a1, w1), (a2, w2)):
            phi3[a] = tau[a]
            phi2[a] = boundary_at(h, sol.phi2, w, 2)
        for w in (w1, w2):
            assert boundary_at(g, phi2, w, 2) == 0
        return FlowPair(phi2, phi3)

    if case is Case.DELETE_INTERIOR_EDGE:
        vw = data
        v, w = g.ends(vw)
        assert all(not inst.mu_at(x) for x in g.vertices)
        h = g.delete_edge(vw)
        assert is_k_edge_connected(h, 2), "G - vw is not 2-edge-connected"
        sol = yield RootedInstanceTwo(h, u, {v: 1, w: 2}, inst.psi2, inst.psi3)
        phi2, phi3 = dict(sol.phi2), dict(sol.phi3)
        phi3[vw] = solve_edge_value(g, phi3, vw, v, 0, 3)
        phi2[vw] = solve_edge_value(g, phi2, vw, v, 0, 2)
        assert phi3[vw] in (1, 2)
        return FlowPair(phi2, phi3)

    raise AssertionError(case)


def solve_two(inst: RootedInstanceTwo, check: bool = True, observer=None) -> FlowPair:
    """Solve a rooted instance; ``observer(instance, case)`` sees every (sub)instance."""
    return _stack.run(lambda x: _step(x, check, observer), inst)


def solve_cubic(g: MultiGraph, check: bool = True, observer=None) -> FlowPair:
    """Nowhere-zero (Z2, Z3) pair on a 3-edge-connected cubic graph.

    The smallest edge is subdivided by a root with mu = 0 and ψ2 = ψ3 = 1 on
    both halves; afterwards the root is suppressed again.
    """
    e = g.edge_ids[0]
    h, u, (e1, e2) = g.subdivide_edge(e)
    inst = RootedInstanceTwo(h, u, {}, {e1: 1, e2: 1}, {e1: 1, e2: 1})
    pair = solve_two(inst, check=check, observer=observer)
    assert pair.phi2[e1] == pair.phi2[e2] and pair.phi3[e1] == pair.phi3[e2]
    phi2 = {f: pair.phi2[f] for f in g.edge_ids if f != e}
    phi3 = {f: pair.phi3[f] for f in g.edge_ids if f != e}
    phi2[e], phi3[e] = pair.phi2[e1], pair.phi3[e1]
    return FlowPair(phi2, phi3)
