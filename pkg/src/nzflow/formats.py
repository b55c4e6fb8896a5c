"""Text documents for graphs and flows.

Graph document::

    nzflow <n> <m>
    e <edge-id> <tail> <head>        (m lines, vertices are 1..n)

Flow document::

    flow <m>
    f <edge-id> <phi2> <phi3> <phi6> <int>

Blank lines and lines starting with ``#`` are ignored by the parsers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphError, MultiGraph


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield no, s.split()


def _ints(fields, no):
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", no) from None


def parse_graph(text: str) -> MultiGraph:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty document")
    no, head = rows[0]
    if len(head) != 3 or head[0] != "nzflow":
        raise ParseError("expected header 'nzflow <n> <m>'", no)
    n, m = _ints(head[1:], no)
    records = []
    seen = set()
    for no, fs in rows[1:]:
        if fs[0] != "e" or len(fs) != 4:
            raise ParseError("expected 'e <edge-id> <tail> <head>'", no)
        e, t, h = _ints(fs[1:], no)
        if e in seen:
            raise ParseError(f"duplicate edge id {e}", no)
        if not (1 <= t <= n and 1 <= h <= n):
            raise ParseError(f"vertex out of range 1..{n}", no)
        if t == h:
            raise ParseError(f"loop at vertex {t}", no)
        seen.add(e)
        records.append((e, t, h))
    if len(records) != m:
        raise ParseError(f"header announces {m} edges, found {len(records)}")
    try:
        return MultiGraph(range(1, n + 1), records)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: MultiGraph) -> str:
    """Serialize; vertices are renumbered 1..n in increasing order if needed."""
    rename = {v: i for i, v in enumerate(g.vertices, start=1)}
    lines = [f"nzflow {g.n} {g.m}"]
    for e, (t, h) in g.edges.items():
        lines.append(f"e {e} {rename[t]} {rename[h]}")
    return "\n".join(lines) + "\n"


@dataclass
class FlowRecord:
    phi2: int
    phi3: int
    phi6: int | None = None
    value: int | None = None


def format_flow(phi2: dict, phi3: dict, phi6: dict, integer: dict) -> str:
    lines = [f"flow {len(phi2)}"]
    for e in sorted(phi2):
        lines.append(f"f {e} {phi2[e]} {phi3[e]} {phi6[e]} {integer[e]}")
    return "\n".join(lines) + "\n"


def parse_flow(text: str) -> dict[int, FlowRecord]:
    """Edge id -> record. The phi6 and int columns may be omitted (e.g. for ``convert``)."""
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty document")
    no, head = rows[0]
    if len(head) != 2 or head[0] != "flow":
        raise ParseError("expected header 'flow <m>'", no)
    (m,) = _ints(head[1:], no)
    out: dict[int, FlowRecord] = {}
    for no, fs in rows[1:]:
        if fs[0] != "f" or not 4 <= len(fs) <= 6:
            raise ParseError("expected 'f <edge-id> <phi2> <phi3> [<phi6> [<int>]]'", no)
        vals = _ints(fs[1:], no)
        e = vals[0]
        if e in out:
            raise ParseError(f"duplicate edge id {e}", no)
        out[e] = FlowRecord(*vals[1:])
    if len(out) != m:
        raise ParseError(f"header announces {m} edges, found {len(out)}")
    return out


def split_documents(text: str, header: str) -> list[str]:
    """Split concatenated documents at each line starting with ``header``."""
    docs: list[list[str]] = []
    for raw in text.splitlines():
        if raw.split()[:1] == [header]:
            docs.append([])
        if docs:
            docs[-1].append(raw)
    return ["\n".join(d) + "\n" for d in docs]


def to_dot(g: MultiGraph, phi6: dict, integer: dict, name: str = "flow") -> str:
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for e, (t, h) in g.edges.items():
        lines.append(f'  {t} -> {h} [label="e{e}: {phi6[e]}/{integer[e]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
