"""Edge functions over Z_k, boundaries, verification and conversion to integer flows.

Edge functions are plain dicts ``{edge_id: residue}``; the modulus travels
alongside as an argument. All arithmetic is against each edge's stored
orientation, reversing an edge is never done, its value is negated instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .cuts import CycleOrder
from .graph import MultiGraph

MODULI = (2, 3, 4, 5, 6)


@dataclass(frozen=True)
class FlowPair:
    """A Z2 function and a Z3 function on the same edge set."""

    phi2: dict[int, int]
    phi3: dict[int, int]

    def __post_init__(self):
        object.__setattr__(self, "phi2", {e: v % 2 for e, v in sorted(self.phi2.items())})
        object.__setattr__(self, "phi3", {e: v % 3 for e, v in sorted(self.phi3.items())})

    def restrict(self, edges) -> FlowPair:
        return FlowPair({e: self.phi2[e] for e in edges}, {e: self.phi3[e] for e in edges})

    def phi6(self) -> dict[int, int]:
        return crt_combine(self)

    @classmethod
    def from_z6(cls, phi6: dict[int, int]) -> FlowPair:
        return cls({e: v % 2 for e, v in phi6.items()}, {e: v % 3 for e, v in phi6.items()})


def boundary(g: MultiGraph, phi: dict[int, int], k: int | None = None, partial: bool = False):
    """∂φ(v) = Σ_{δ⁺(v)} φ − Σ_{δ⁻(v)} φ, reduced mod ``k`` unless ``k`` is None.

    With ``partial=True`` missing edges count as 0; otherwise a missing edge is
    an error.
    """
    if not partial:
        missing = [e for e in g.edge_ids if e not in phi]
        if missing:
            raise ValueError(f"edge function undefined on edges {missing[:5]}")
    out = {v: 0 for v in g.vertices}
    for e, (t, h) in g.edges.items():
        x = phi.get(e, 0)
        out[t] += x
        out[h] -= x
    if k is not None:
        out = {v: x % k for v, x in out.items()}
    return out


def boundary_at(g: MultiGraph, phi: dict[int, int], v: int, k: int | None = None) -> int:
    """∂φ(v) using only the edges at ``v`` (all of them must be defined)."""
    s = sum(g.sign(e, v) * phi[e] for e in g.incident(v))
    return s % k if k is not None else s


def solve_edge_value(g: MultiGraph, phi: dict[int, int], e: int, v: int, target: int, k: int) -> int:
    """Value of ``e`` making ∂φ(v) == target mod k, given φ on the other edges at v."""
    rest = sum(g.sign(f, v) * phi[f] for f in g.incident(v) if f != e)
    return (g.sign(e, v) * (target - rest)) % k


def support(phi: dict[int, int]) -> set[int]:
    return {e for e, x in phi.items() if x}


@dataclass
class PairReport:
    is_flow2: bool
    is_flow3: bool
    nowhere_zero: bool
    bad2: list[int] = field(default_factory=list)  # vertices violating Kirchhoff mod 2
    bad3: list[int] = field(default_factory=list)
    zero_edges: list[int] = field(default_factory=list)
    missing_edges: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_flow2 and self.is_flow3 and self.nowhere_zero and not self.missing_edges

    def describe(self) -> str:
        lines = []
        if self.missing_edges:
            lines.append(f"undefined on edges: {self.missing_edges}")
        if not self.is_flow2:
            lines.append(f"Kirchhoff mod 2 fails at vertices: {self.bad2}")
        if not self.is_flow3:
            lines.append(f"Kirchhoff mod 3 fails at vertices: {self.bad3}")
        if not self.nowhere_zero:
            lines.append(f"(phi2, phi3) = (0, 0) on edges: {self.zero_edges}")
        return "\n".join(lines) if lines else "ok"


def verify_pair(g: MultiGraph, pair: FlowPair) -> PairReport:
    missing = sorted(e for e in g.edge_ids if e not in pair.phi2 or e not in pair.phi3)
    phi2 = {e: pair.phi2.get(e, 0) for e in g.edge_ids}
    phi3 = {e: pair.phi3.get(e, 0) for e in g.edge_ids}
    bad2 = [v for v, x in boundary(g, phi2, 2).items() if x]
    bad3 = [v for v, x in boundary(g, phi3, 3).items() if x]
    zeros = [e for e in g.edge_ids if phi2[e] == 0 and phi3[e] == 0]
    return PairReport(not bad2, not bad3, not zeros, bad2, bad3, zeros, missing)


def cut_sum_check(g: MultiGraph, phi: dict[int, int], xs, k: int | None = None) -> bool:
    """Σ_{δ⁺(X)} φ == Σ_{δ⁻(X)} φ (mod k, or over the integers when k is None)."""
    out, inn = g.boundary_edges(xs)
    diff = sum(phi[e] for e in out) - sum(phi[e] for e in inn)
    return (diff % k == 0) if k is not None else diff == 0


def crt_combine(pair: FlowPair) -> dict[int, int]:
    """Z2 x Z3 -> Z6: the residue r with r = a (mod 2) and r = b (mod 3) is 3a + 4b mod 6."""
    return {e: (3 * pair.phi2[e] + 4 * pair.phi3[e]) % 6 for e in pair.phi2}


def circulation_on_class(g: MultiGraph, order: CycleOrder, c: int) -> dict[int, int]:
    """Z3 function on the links of ``order`` carrying ``c`` once around the quotient cycle."""
    return {f: (c if fwd else -c) % 3 for f, fwd in zip(order.links, order.forward)}


class ConversionError(AssertionError):
    """The 0/1 transshipment had no solution, impossible for a genuine Z6-flow."""


def to_integer_flow(g: MultiGraph, phi6: dict[int, int], k: int = 6) -> dict[int, int]:
    """Lift a nowhere-zero Z_k-flow to an integer flow f with f = φ (mod k), 0 < |f| < k.

    Start from representatives r in 1..k-1. Then ∂r = k·t with Σt = 0, and we
    look for an edge set A whose indicator has boundary t; f = r − k·1_A. A is
    found by unit-capacity augmenting paths from surplus to deficit vertices,
    each edge usable once in its own direction.
    """
    r = {e: phi6[e] % k for e in g.edge_ids}
    if any(x == 0 for x in r.values()):
        raise ValueError("to_integer_flow needs a nowhere-zero function")
    bd = boundary(g, r)
    if any(x % k for x in bd.values()):
        raise ValueError(f"not a Z{k}-flow")
    excess = {v: x // k for v, x in bd.items()}  # remaining net outflow still owed
    in_a = {e: False for e in g.edge_ids}

    def augment(src):
        # BFS in the residual graph: unused edges forward, used edges backward
        prev = {src: None}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if x != src and excess[x] < 0:
                x_sink = x
                path = []
                while prev[x] is not None:
                    e, y = prev[x]
                    path.append(e)
                    x = y
                for e in path:
                    in_a[e] = not in_a[e]
                return x_sink
            for e in g.incident(x):
                t, h = g.ends(e)
                if not in_a[e] and t == x and h not in prev:
                    prev[h] = (e, x)
                    queue.append(h)
                elif in_a[e] and h == x and t not in prev:
                    prev[t] = (e, x)
                    queue.append(t)
        return None

    for v in g.vertices:
        while excess[v] > 0:
            sink = augment(v)
            if sink is None:
                raise ConversionError(f"no augmenting path from vertex {v}")
            excess[v] -= 1
            excess[sink] += 1
    f = {e: r[e] - k if in_a[e] else r[e] for e in g.edge_ids}
    if any(boundary(g, f).values()):
        raise ConversionError("integer Kirchhoff failed after conversion")
    return f


@dataclass
class IntegerReport:
    kirchhoff: bool
    in_range: bool
    congruent: bool
    bad_vertices: list[int] = field(default_factory=list)
    bad_edges: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.kirchhoff and self.in_range and self.congruent


def verify_integer_flow(g: MultiGraph, f: dict[int, int], phi6: dict[int, int] | None = None, k: int = 6) -> IntegerReport:
    bad_v = [v for v, x in boundary(g, f).items() if x]
    out_of_range = [e for e in g.edge_ids if not 0 < abs(f[e]) < k]
    noncong = [] if phi6 is None else [e for e in g.edge_ids if (f[e] - phi6[e]) % k]
    return IntegerReport(not bad_v, not out_of_range, not noncong, bad_v, sorted(set(out_of_range + noncong)))
