"""Brute-force ground truth for nowhere-zero Z_k-flows.

Every Z_k-flow is a unique Z_k-combination of the fundamental cycles of a
spanning forest, and the coefficient of a cycle equals the flow value on its
non-tree edge. The search runs over coefficient vectors in lexicographic
order, so the first witness is reproducible. Nothing here shares code with the
solvers or with :mod:`nzflow.flows`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MultiGraph

MAX_DIM = 12


class DimensionGuardError(ValueError):
    pass


@dataclass(frozen=True)
class CycleBasis:
    forest: frozenset[int]
    nontree: tuple[int, ...]
    cycles: tuple[dict[int, int], ...]  # signed incidence vector, entries ±1

    @property
    def dim(self) -> int:
        return len(self.cycles)


def cycle_basis(g: MultiGraph) -> CycleBasis:
    parent: dict[int, tuple[int, int] | None] = {}  # vertex -> (parent vertex, edge)
    depth: dict[int, int] = {}
    for s in g.vertices:
        if s in parent:
            continue
        parent[s] = None
        depth[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for e in g.incident(x):
                t, h = g.ends(e)
                y = h if t == x else t
                if y not in parent:
                    parent[y] = (x, e)
                    depth[y] = depth[x] + 1
                    stack.append(y)
    forest = frozenset(p[1] for p in parent.values() if p is not None)
    nontree = tuple(e for e in g.edge_ids if e not in forest)
    cycles = []
    for e in nontree:
        a, b = g.ends(e)
        # traverse e from a to b, then return from b to a through the tree
        vec = {e: 1}
        x, y = b, a
        up_x, up_y = [], []
        while x != y:
            if depth[x] >= depth[y]:
                px, pe = parent[x]
                up_x.append((pe, x, px))
                x = px
            else:
                py, pe = parent[y]
                up_y.append((pe, py, y))
                y = py
        # walk b -> lca, then lca -> a
        for pe, frm, to in up_x + up_y[::-1]:
            vec[pe] = vec.get(pe, 0) + (1 if g.ends(pe) == (frm, to) else -1)
        cycles.append({k: v for k, v in vec.items() if v})
    return CycleBasis(forest, nontree, tuple(cycles))


def is_nz_zk_flow(g: MultiGraph, phi: dict[int, int], k: int) -> bool:
    """Direct check: defined everywhere, nonzero mod k, conserved mod k at every vertex."""
    if set(phi) != set(g.edge_ids):
        return False
    if any(phi[e] % k == 0 for e in g.edge_ids):
        return False
    net = {v: 0 for v in g.vertices}
    for e, (t, h) in g.edges.items():
        net[t] += phi[e]
        net[h] -= phi[e]
    return all(x % k == 0 for x in net.values())


def accepts(g: MultiGraph, phi: dict[int, int], k: int) -> bool:
    """Oracle-side verifier: nowhere-zero, conserved, and equal to its cycle-space expansion."""
    if not is_nz_zk_flow(g, phi, k):
        return False
    basis = cycle_basis(g)
    rebuilt = {e: 0 for e in g.edge_ids}
    for e0, vec in zip(basis.nontree, basis.cycles):
        c = phi[e0]
        for e, s in vec.items():
            rebuilt[e] += c * s
    return all((rebuilt[e] - phi[e]) % k == 0 for e in g.edge_ids)


def find_nz_zk_flow(g: MultiGraph, k: int, max_dim: int = MAX_DIM) -> dict[int, int] | None:
    """First nowhere-zero Z_k-flow in lexicographic coefficient order, or None.

    Coefficient 0 on a basis cycle would zero its non-tree edge, so only 1..k-1
    are tried there. A tree edge is checked as soon as the last cycle through it
    has its coefficient fixed.
    """
    if k not in range(2, 7):
        raise ValueError("k must be in 2..6")
    basis = cycle_basis(g)
    dim = basis.dim
    if dim > max_dim:
        raise DimensionGuardError(f"cycle space has dimension {dim} > {max_dim}")
    if g.m == 0:
        return {}
    # a tree edge on no cycle is a bridge and can never be nonzero
    covered = set().union(*basis.cycles) if basis.cycles else set()
    if any(e not in covered for e in basis.forest):
        return None
    last = {}
    for i, vec in enumerate(basis.cycles):
        for e in vec:
            if e in basis.forest:
                last[e] = i
    closes = [[] for _ in range(dim)]
    for e, i in last.items():
        closes[i].append(e)
    values = {e: 0 for e in basis.forest}
    coeffs = [0] * dim

    def search(i):
        if i == dim:
            return True
        vec = basis.cycles[i]
        for c in range(1, k):
            coeffs[i] = c
            for e, s in vec.items():
                if e in values:
                    values[e] += c * s
            if all(values[e] % k for e in closes[i]) and search(i + 1):
                return True
            for e, s in vec.items():
                if e in values:
                    values[e] -= c * s
        return False

    if not search(0):
        return None
    phi = {e: values[e] % k for e in basis.forest}
    for e0, c in zip(basis.nontree, coeffs):
        phi[e0] = c
    return dict(sorted(phi.items()))
