"""Loopless oriented multigraphs with stable vertex and edge identities.

Every surgery returns a fresh graph. Surviving edges keep their id and their
(tail, head) orientation, so edge functions computed on a derived graph can be
pulled back onto the original by id.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping


class GraphError(ValueError):
    """Raised for malformed graphs or surgeries on unknown elements."""


class MultiGraph:
    """An oriented multigraph without loops.

    ``edges`` maps an edge id to its ``(tail, head)`` pair. Vertex and edge ids
    are ints. Fresh ids are allocated from per-graph counters that only grow,
    and derived graphs inherit the counters of their parent.
    """

    __slots__ = ("_vertices", "_edges", "_inc", "next_vertex", "next_edge")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Mapping[int, tuple[int, int]] | Iterable[tuple[int, int, int]] = (),
        next_vertex: int | None = None,
        next_edge: int | None = None,
    ):
        if isinstance(edges, Mapping):
            records = [(e, t, h) for e, (t, h) in edges.items()]
        else:
            records = list(edges)
        vs = set(vertices)
        emap: dict[int, tuple[int, int]] = {}
        for e, t, h in records:
            if e in emap:
                raise GraphError(f"duplicate edge id {e}")
            if t == h:
                raise GraphError(f"edge {e} is a loop at {t}")
            vs.add(t)
            vs.add(h)
            emap[e] = (t, h)
        self._vertices = tuple(sorted(vs))
        self._edges = dict(sorted(emap.items()))
        inc: dict[int, list[int]] = {v: [] for v in self._vertices}
        for e, (t, h) in self._edges.items():
            inc[t].append(e)
            inc[h].append(e)
        self._inc = {v: tuple(es) for v, es in inc.items()}
        top_v = max(self._vertices, default=0) + 1
        top_e = max(self._edges, default=0) + 1
        self.next_vertex = max(top_v, next_vertex or 0)
        self.next_edge = max(top_e, next_edge or 0)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], vertices: Iterable[int] = ()):
        """Build a graph whose edges are numbered 1, 2, ... in the given order."""
        return cls(vertices, [(i, t, h) for i, (t, h) in enumerate(pairs, start=1)])

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> dict[int, tuple[int, int]]:
        return dict(self._edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_vertex(self, v) -> bool:
        return v in self._inc

    def has_edge(self, e) -> bool:
        return e in self._edges

    def ends(self, e: int) -> tuple[int, int]:
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError(f"unknown edge {e}") from None

    def tail(self, e: int) -> int:
        return self.ends(e)[0]

    def head(self, e: int) -> int:
        return self.ends(e)[1]

    def other_end(self, e: int, v: int) -> int:
        t, h = self.ends(e)
        if v == t:
            return h
        if v == h:
            return t
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def incident(self, v: int) -> tuple[int, ...]:
        """δ(v): ids of edges incident with ``v``, in increasing order."""
        try:
            return self._inc[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def out_edges(self, v: int) -> tuple[int, ...]:
        return tuple(e for e in self.incident(v) if self._edges[e][0] == v)

    def in_edges(self, v: int) -> tuple[int, ...]:
        return tuple(e for e in self.incident(v) if self._edges[e][1] == v)

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def sign(self, e: int, v: int) -> int:
        """+1 if ``e`` leaves ``v``, -1 if it enters ``v``."""
        t, h = self.ends(e)
        if v == t:
            return 1
        if v == h:
            return -1
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def boundary_edges(self, xs: Iterable[int]) -> tuple[list[int], list[int]]:
        """(δ⁺(X), δ⁻(X)) for a vertex set X."""
        xs = set(xs)
        out, inn = [], []
        for e, (t, h) in self._edges.items():
            if t in xs and h not in xs:
                out.append(e)
            elif h in xs and t not in xs:
                inn.append(e)
        return out, inn

    def neighbours(self, v: int) -> list[int]:
        return sorted({self.other_end(e, v) for e in self.incident(v)})

    def components(self, without_edges: Iterable[int] = ()) -> list[frozenset[int]]:
        """Vertex sets of the connected components, ordered by smallest vertex.

        ``without_edges`` are ignored during the search, which avoids building
        an intermediate graph for g - F.
        """
        skip = set(without_edges)
        seen: set[int] = set()
        parts = []
        for s in self._vertices:
            if s in seen:
                continue
            seen.add(s)
            part = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for e in self._inc[x]:
                    if e in skip:
                        continue
                    y = self.other_end(e, x)
                    if y not in seen:
                        seen.add(y)
                        part.append(y)
                        stack.append(y)
            parts.append(frozenset(part))
        return parts

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced_edges(self, xs: Iterable[int]) -> list[int]:
        xs = set(xs)
        return [e for e, (t, h) in self._edges.items() if t in xs and h in xs]

    # -- surgeries -------------------------------------------------------

    def _derive(self, vertices, edges, next_vertex=None, next_edge=None) -> MultiGraph:
        return MultiGraph(
            vertices,
            edges,
            next_vertex=max(self.next_vertex, next_vertex or 0),
            next_edge=max(self.next_edge, next_edge or 0),
        )

    def identify(self, parts: Iterable[Iterable[int]]):
        """Identify each vertex set in ``parts`` to a single vertex.

        Edges with both ends in one part are deleted. A part with one vertex
        keeps that vertex; larger parts get fresh ids in the order given.

        Returns ``(graph, edge_map, vertex_map)``: ``edge_map`` sends every old
        edge id to its id in the new graph or to ``None`` if it was deleted,
        ``vertex_map`` sends every old vertex to its image.
        """
        vmap = {v: v for v in self._vertices}
        seen: set[int] = set()
        nxt = self.next_vertex
        for part in parts:
            part = list(part)
            if not part:
                raise GraphError("empty part")
            for v in part:
                if v not in self._inc:
                    raise GraphError(f"unknown vertex {v}")
                if v in seen:
                    raise GraphError(f"vertex {v} appears in two parts")
                seen.add(v)
            if len(part) > 1:
                for v in part:
                    vmap[v] = nxt
                nxt += 1
        edge_map: dict[int, int | None] = {}
        new_edges = {}
        for e, (t, h) in self._edges.items():
            nt, nh = vmap[t], vmap[h]
            if nt == nh:
                edge_map[e] = None
            else:
                edge_map[e] = e
                new_edges[e] = (nt, nh)
        g = self._derive(set(vmap.values()), new_edges, next_vertex=nxt)
        return g, edge_map, vmap

    def contract_edge(self, e: int):
        """G/e. Returns ``(graph, edge_map, vertex_map)`` as :meth:`identify`."""
        t, h = self.ends(e)
        return self.identify([(t, h)])

    def subdivide_edge(self, e: int):
        """Replace ``e`` by ``tail(e) -> u -> head(e)``; returns ``(graph, u, (e1, e2))``."""
        t, h = self.ends(e)
        u = self.next_vertex
        e1, e2 = self.next_edge, self.next_edge + 1
        edges = dict(self._edges)
        del edges[e]
        edges[e1] = (t, u)
        edges[e2] = (u, h)
        g = self._derive(self._vertices + (u,), edges, u + 1, e2 + 1)
        return g, u, (e1, e2)

    def delete_edge(self, e: int) -> MultiGraph:
        self.ends(e)
        edges = {f: th for f, th in self._edges.items() if f != e}
        return self._derive(self._vertices, edges)

    def delete_edges(self, es: Iterable[int]) -> MultiGraph:
        es = set(es)
        for e in es:
            self.ends(e)
        edges = {f: th for f, th in self._edges.items() if f not in es}
        return self._derive(self._vertices, edges)

    def delete_vertex(self, v: int) -> MultiGraph:
        self.incident(v)
        edges = {e: (t, h) for e, (t, h) in self._edges.items() if v not in (t, h)}
        return self._derive([x for x in self._vertices if x != v], edges)

    def subgraph(self, xs: Iterable[int], edges: Iterable[int] | None = None) -> MultiGraph:
        """Subgraph on vertex set ``xs`` keeping ``edges`` (default: all induced edges)."""
        xs = set(xs)
        if edges is None:
            keep = {e: self._edges[e] for e in self.induced_edges(xs)}
        else:
            keep = {e: self.ends(e) for e in edges}
            if any(t not in xs or h not in xs for t, h in keep.values()):
                raise GraphError("edge leaves the vertex set")
        return self._derive(xs, keep)

    def add_vertex(self):
        """Returns ``(graph, new_vertex)``."""
        u = self.next_vertex
        return self._derive(self._vertices + (u,), self._edges, u + 1), u

    def add_edge(self, tail: int, head: int):
        """Returns ``(graph, new_edge)``."""
        for v in (tail, head):
            self.incident(v)
        e = self.next_edge
        edges = dict(self._edges)
        edges[e] = (tail, head)
        return self._derive(self._vertices, edges, next_edge=e + 1), e

    def relabel_vertices(self, mapping: Mapping[int, int]) -> MultiGraph:
        """Rename vertices through an injective ``mapping``; edge ids unchanged."""
        if len(set(mapping[v] for v in self._vertices)) != self.n:
            raise GraphError("vertex relabelling is not injective")
        edges = {e: (mapping[t], mapping[h]) for e, (t, h) in self._edges.items()}
        return MultiGraph((mapping[v] for v in self._vertices), edges, next_edge=self.next_edge)

    # -- misc ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, tuple(self._edges.items())))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"


def degree_sequence(g: MultiGraph) -> list[int]:
    return sorted((g.degree(v) for v in g.vertices), reverse=True)


def is_cubic(g: MultiGraph) -> bool:
    return all(g.degree(v) == 3 for v in g.vertices)


def is_isomorphic(a: MultiGraph, b: MultiGraph) -> bool:
    """Undirected multigraph isomorphism by backtracking; meant for small graphs."""
    if a.n != b.n or a.m != b.m or degree_sequence(a) != degree_sequence(b):
        return False

    def mult(g):
        c: dict[frozenset, int] = {}
        for t, h in g.edges.values():
            k = frozenset((t, h))
            c[k] = c.get(k, 0) + 1
        return c

    ma, mb = mult(a), mult(b)
    av = sorted(a.vertices, key=a.degree, reverse=True)
    bv = list(b.vertices)
    assign: dict[int, int] = {}
    used: set[int] = set()

    def extend(i):
        if i == len(av):
            return True
        x = av[i]
        for y in bv:
            if y in used or a.degree(x) != b.degree(y):
                continue
            ok = all(
                ma.get(frozenset((x, px)), 0) == mb.get(frozenset((y, py)), 0)
                for px, py in assign.items()
            )
            if ok:
                assign[x] = y
                used.add(y)
                if extend(i + 1):
                    return True
                del assign[x]
                used.discard(y)
        return False

    return extend(0)
