"""Bridges, cut vertices, 2-edge-cuts and generalized series classes.

Two-edge cuts are found with cycle-space labels. Fix a spanning forest and
give the i-th non-tree edge the bit ``1 << i``; a tree edge gets the XOR of the
bits of every fundamental cycle through it. An edge is a bridge iff its label
is 0, and two non-bridge edges form a 2-edge-cut iff their labels are equal
(both statements are exact, labels are arbitrary-precision ints).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import GraphError, MultiGraph


def _spanning_forest(g: MultiGraph):
    """BFS forest: (order, parent_edge) with roots taken in vertex order."""
    parent_edge: dict[int, int | None] = {}
    order = []
    for s in g.vertices:
        if s in parent_edge:
            continue
        parent_edge[s] = None
        queue = [s]
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            order.append(x)
            for e in g.incident(x):
                y = g.other_end(e, x)
                if y not in parent_edge:
                    parent_edge[y] = e
                    queue.append(y)
    return order, parent_edge


def cut_labels(g: MultiGraph) -> dict[int, int]:
    order, parent_edge = _spanning_forest(g)
    tree = {e for e in parent_edge.values() if e is not None}
    labels: dict[int, int] = {}
    pot = {v: 0 for v in g.vertices}
    bit = 0
    for e, (t, h) in g.edges.items():
        if e in tree:
            continue
        b = 1 << bit
        bit += 1
        labels[e] = b
        pot[t] ^= b
        pot[h] ^= b
    acc = dict(pot)
    for v in reversed(order):
        pe = parent_edge[v]
        if pe is None:
            continue
        labels[pe] = acc[v]
        acc[g.other_end(pe, v)] ^= acc[v]
    return dict(sorted(labels.items()))


def bridges(g: MultiGraph) -> set[int]:
    return {e for e, lab in cut_labels(g).items() if lab == 0}


def cut_vertices(g: MultiGraph) -> set[int]:
    """Articulation points (iterative lowpoint DFS; parallel edges handled by edge id)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, None, iter(g.incident(root)))]
        while stack:
            x, pe, it = stack[-1]
            advanced = False
            for e in it:
                if e == pe:
                    continue
                y = g.other_end(e, x)
                if y not in disc:
                    disc[y] = low[y] = counter
                    counter += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, e, iter(g.incident(y))))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if p != root and low[x] >= disc[p]:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


def series_classes(g: MultiGraph) -> list[frozenset[int]]:
    """Classes of ``e ~ f iff e == f or {e, f} is a 2-edge-cut``.

    Only meaningful on a 2-edge-connected graph; raises otherwise. Classes are
    ordered by their smallest edge id.
    """
    if not g.is_connected():
        raise GraphError("series classes need a connected graph")
    groups: dict[int, list[int]] = {}
    for e, lab in cut_labels(g).items():
        if lab == 0:
            raise GraphError(f"edge {e} is a bridge; series classes need a bridgeless graph")
        groups.setdefault(lab, []).append(e)
    classes = [frozenset(es) for es in groups.values()]
    return sorted(classes, key=min)


@dataclass(frozen=True)
class CutStructure:
    bridges: frozenset[int]
    cut_vertices: frozenset[int]
    two_cuts: frozenset[frozenset[int]]
    series_classes: tuple[frozenset[int], ...] | None  # None when bridges exist


def analyze(g: MultiGraph) -> CutStructure:
    if not g.is_connected():
        raise GraphError("analyze needs a connected graph")
    labels = cut_labels(g)
    brs = frozenset(e for e, lab in labels.items() if lab == 0)
    groups: dict[int, list[int]] = {}
    for e, lab in labels.items():
        if lab:
            groups.setdefault(lab, []).append(e)
    pairs = set()
    for es in groups.values():
        pairs.update(frozenset(p) for p in combinations(es, 2))
    for b in brs:
        pairs.update(frozenset((b, f)) for f in labels if f != b)
    classes = None
    if not brs:
        classes = tuple(sorted((frozenset(es) for es in groups.values()), key=min))
    return CutStructure(brs, frozenset(cut_vertices(g)), frozenset(pairs), classes)


def is_k_edge_connected(g: MultiGraph, k: int) -> bool:
    """True iff g is connected and has no edge cut with fewer than k edges (k <= 3)."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    if not g.is_connected():
        return False
    if k == 1:
        return True
    labels = list(cut_labels(g).values())
    if any(lab == 0 for lab in labels):
        return False
    return k == 2 or len(set(labels)) == len(labels)


def two_edge_cuts(g: MultiGraph) -> list[tuple[int, int]]:
    """Sorted list of 2-edge-cuts (e < f) of a bridgeless connected graph."""
    return sorted(p for cls in series_classes(g) for p in combinations(sorted(cls), 2))


@dataclass(frozen=True)
class CycleOrder:
    """Components G_0..G_{l-1} of g - F in cyclic order; ``links[k]`` joins G_k and G_{k+1}."""

    components: tuple[frozenset[int], ...]
    links: tuple[int, ...]
    forward: tuple[bool, ...]  # links[k] has its tail in G_k

    def __len__(self):
        return len(self.links)

    def index_of(self, v: int) -> int:
        for k, comp in enumerate(self.components):
            if v in comp:
                return k
        raise KeyError(v)


def quotient_cycle_order(g: MultiGraph, F, anchor: int | None = None) -> CycleOrder:
    """Order the components of g - F around the quotient cycle.

    The walk starts at the component containing ``anchor`` (default: the
    smallest end of an F edge) and leaves it through its smaller F edge. Raises
    :class:`GraphError` if identifying the components does not give a cycle.
    """
    F = sorted(F)
    if len(F) < 2:
        raise GraphError("need at least two edges")
    for e in F:
        g.ends(e)
    comps = [c for c in g.components(without_edges=F)]
    where = {v: i for i, c in enumerate(comps) for v in c}
    touching: dict[int, list[int]] = {i: [] for i in range(len(comps))}
    for e in F:
        a, b = (where[x] for x in g.ends(e))
        if a == b:
            raise GraphError(f"edge {e} has both ends in one component of g - F")
        touching[a].append(e)
        touching[b].append(e)
    if len(comps) != len(F) or any(len(es) != 2 for es in touching.values()):
        raise GraphError("identifying the components of g - F does not give a cycle")
    if anchor is None:
        anchor = min(v for e in F for v in g.ends(e))
    start = where[anchor]
    order = [start]
    links = []
    cur, came = start, None
    for _ in range(len(F)):
        options = [e for e in touching[cur] if e != came]
        f = min(options)
        links.append(f)
        t, h = g.ends(f)
        nxt = where[h] if where[t] == cur else where[t]
        came = f
        cur = nxt
        order.append(cur)
    if cur != start or len(set(order[:-1])) != len(F):
        raise GraphError("identifying the components of g - F does not give a cycle")
    components = tuple(comps[i] for i in order[:-1])
    forward = tuple(g.tail(f) in components[k] for k, f in enumerate(links))
    return CycleOrder(components, tuple(links), forward)
