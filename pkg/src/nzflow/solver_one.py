"""Rooted recursion over generalized series classes.

An instance is a graph G with a root u, two root edges S, a Z2 prescription
on S and a Z3 prescription on all of δ(u). Off the root G is cubic; G is
3-edge-connected and G - u is 2-edge-connected; the Z3 prescription is
conserved at u. The solver returns a Z2-flow and a Z3-flow on G matching the
prescriptions, with (φ2(e), φ3(e)) != (0, 0) on every edge away from u.

Each step picks a root edge uv outside S, takes the series class F of G - u
through the two other edges at v, splits G - u - F into the pieces G_0 = {v},
G_1, ..., G_{l-1} around the quotient cycle, fixes φ3 on F (and φ2 on most of
F), and recurses on each piece with everything else shrunk to a new root.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _stack
from .cuts import is_k_edge_connected, quotient_cycle_order, series_classes
from .flows import FlowPair, boundary_at, circulation_on_class
from .graph import MultiGraph


class HypothesisError(AssertionError):
    """A rooted instance violates one of the lemma hypotheses."""


@dataclass(frozen=True)
class RootedInstanceOne:
    graph: MultiGraph
    root: int
    S: tuple[int, int]
    psi2: dict[int, int]  # on S
    psi3: dict[int, int]  # on δ(root)

    def check(self):
        g, u = self.graph, self.root
        du = set(g.incident(u))
        if len(set(self.S)) != 2 or not set(self.S) <= du:
            raise HypothesisError("S must be two distinct edges at the root")
        if set(self.psi2) != set(self.S):
            raise HypothesisError("psi2 must be defined exactly on S")
        if set(self.psi3) != du:
            raise HypothesisError("psi3 must be defined exactly on the root edges")
        bad = [v for v in g.vertices if v != u and g.degree(v) != 3]
        if bad:
            raise HypothesisError(f"(i) vertices {bad} off the root do not have degree 3")
        if not is_k_edge_connected(g, 3):
            raise HypothesisError("(ii) graph is not 3-edge-connected")
        if not is_k_edge_connected(g.delete_vertex(u), 2):
            raise HypothesisError("(iii) graph minus the root is not 2-edge-connected")
        if boundary_at(g, self.psi3, u, 3):
            raise HypothesisError("(iv) psi3 is not conserved at the root")


@dataclass(frozen=True)
class Decomposition:
    uv: int
    v: int
    F: frozenset[int]
    order: object  # CycleOrder with components[0] == {v}
    i: int
    j: int
    s_i: int  # edge of S ending in G_i
    s_j: int  # edge of S ending in G_j


def pick_class(inst: RootedInstanceOne) -> Decomposition:
    g, u = inst.graph, inst.root
    uv = min(e for e in g.incident(u) if e not in inst.S)
    v = g.other_end(uv, u)
    h = g.delete_vertex(u)
    at_v = h.incident(v)
    assert len(at_v) == 2, "v must have exactly two edges away from the root"
    F = next(c for c in series_classes(h) if at_v[0] in c)
    assert at_v[1] in F
    order = quotient_cycle_order(h, F, anchor=v)
    assert order.components[0] == frozenset([v])
    ends = []
    for s in inst.S:
        ends.append((order.index_of(g.other_end(s, u)), s))
    ends.sort()
    (i, s_i), (j, s_j) = ends
    assert 0 < i <= j
    for k, comp in enumerate(order.components):
        assert any(g.other_end(e, u) in comp for e in g.incident(u)), f"no root edge into G_{k}"
    return Decomposition(uv, v, F, order, i, j, s_i, s_j)


def extend_psi3_over_F(inst: RootedInstanceOne, dec: Decomposition) -> dict[int, int]:
    """Z3 values on F that make ψ3 a flow once every G_k is shrunk to a point.

    Among the three shifts by the class circulation, the smallest one keeping
    f_{i-1} and f_j nonzero is used.
    """
    g, u = inst.graph, inst.root
    order = dec.order
    ell = len(order)
    # net outflow of each G_k through root edges
    b = [0] * ell
    for e in g.incident(u):
        k = order.index_of(g.other_end(e, u))
        b[k] -= g.sign(e, u) * inst.psi3[e]
    # x[k] is the amount carried along f_k in walk direction; x[l-1] = 0 as base
    x = [0] * ell
    carry = 0
    for k in range(ell):
        carry -= b[k]
        x[k] = carry % 3
    assert x[ell - 1] == 0, "root prescription is not conserved"
    base = {f: (x[k] if fwd else -x[k]) % 3 for k, (f, fwd) in enumerate(zip(order.links, order.forward))}
    need = {order.links[dec.i - 1], order.links[dec.j]}
    for c in range(3):
        shift = circulation_on_class(g, order, c)
        ext = {f: (base[f] + shift[f]) % 3 for f in base}
        if all(ext[f] for f in need):
            return ext
    raise AssertionError("no multiple of the class circulation clears f_{i-1} and f_j")


def shrink_to_piece(g: MultiGraph, comp) -> tuple[MultiGraph, int]:
    """G_k^+: identify every vertex outside ``comp`` to a single new root."""
    rest = [v for v in g.vertices if v not in comp]
    gk, _, vmap = g.identify([rest])
    return gk, vmap[rest[0]]


def _step(inst: RootedInstanceOne, check: bool, observer):
    if check:
        inst.check()
    if observer is not None:
        observer(inst)
    g, u = inst.graph, inst.root
    if g.n == 2:
        phi3 = dict(inst.psi3)
        phi2 = dict(inst.psi2)
        free = [e for e in g.incident(u) if e not in inst.S]
        parity = sum(phi2.values()) % 2
        for n_, e in enumerate(free):
            phi2[e] = parity if n_ == 0 else 0
        return FlowPair(phi2, phi3)

    dec = pick_class(inst)
    order = dec.order
    ell = len(order)
    links = order.links
    psi3 = dict(inst.psi3)
    psi3.update(extend_psi3_over_F(inst, dec))
    psi2 = dict(inst.psi2)
    held = {links[dec.i - 1], links[dec.j]}
    for f in links:
        if f not in held:
            psi2[f] = 1

    pieces = {}
    for k, comp in enumerate(order.components):
        pieces[k] = shrink_to_piece(g, comp)

    def sub(k, S):
        gk, r = pieces[k]
        return RootedInstanceOne(
            gk, r, tuple(S), {e: psi2[e] for e in S}, {e: psi3[e] for e in gk.incident(r)}
        )

    solved: dict[int, FlowPair] = {}
    i, j = dec.i, dec.j
    if i == j:
        sol = yield sub(i, inst.S)
        solved[i] = sol
        psi2[links[i - 1]] = sol.phi2[links[i - 1]]
        psi2[links[i]] = sol.phi2[links[i]]
    else:
        sol_i = yield sub(i, (links[i], dec.s_i))
        solved[i] = sol_i
        psi2[links[i - 1]] = sol_i.phi2[links[i - 1]]
        sol_j = yield sub(j, (links[j - 1], dec.s_j))
        solved[j] = sol_j
        psi2[links[j]] = sol_j.phi2[links[j]]
    for k in range(ell):
        if k not in solved:
            solved[k] = yield sub(k, (links[k - 1], links[k]))

    phi2: dict[int, int] = {}
    phi3: dict[int, int] = {}
    for k in range(ell):
        sol = solved[k]
        for e in sol.phi2:
            if e in phi2:
                assert phi2[e] == sol.phi2[e] and phi3[e] == sol.phi3[e], f"pieces disagree on {e}"
            phi2[e] = sol.phi2[e]
            phi3[e] = sol.phi3[e]
    return FlowPair(phi2, phi3)


def solve_one(inst: RootedInstanceOne, check: bool = True, observer=None) -> FlowPair:
    """Solve a rooted instance; ``observer`` sees every (sub)instance in visiting order."""
    return _stack.run(lambda x: _step(x, check, observer), inst)


def seed_instance(g: MultiGraph, root: int | None = None) -> RootedInstanceOne:
    """Root a cubic 3-edge-connected graph so the prescription covers every root edge.

    ψ3 is nonzero on all three root edges (value +1 in the outgoing direction),
    which is conserved because 3 = 0 in Z3; ψ2 is 1 on S.
    """
    u = g.vertices[0] if root is None else root
    du = g.incident(u)
    if len(du) != 3:
        raise ValueError("root must have degree 3")
    S = (du[0], du[1])
    psi3 = {e: g.sign(e, u) % 3 for e in du}
    psi2 = {e: 1 for e in S}
    return RootedInstanceOne(g, u, S, psi2, psi3)


def solve_cubic(g: MultiGraph, check: bool = True, observer=None) -> FlowPair:
    """Nowhere-zero (Z2, Z3) pair on a 3-edge-connected cubic graph."""
    pair = solve_one(seed_instance(g), check=check, observer=observer)
    return pair.restrict(g.edge_ids)
