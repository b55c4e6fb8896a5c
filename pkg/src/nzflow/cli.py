"""Command line interface.

Exit codes: 0 success (or the checked property holds), 1 a checked property
fails, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle, reduction
from .flows import FlowPair, crt_combine, to_integer_flow, verify_integer_flow, verify_pair
from .formats import ParseError, format_flow, format_graph, parse_flow, parse_graph, split_documents, to_dot
from .generators import NAMED, GeneratorError, generate
from .graph import GraphError
from .pipeline import solve_pipeline


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _with_suffix(path: str, algo: str) -> Path:
    p = Path(path)
    return p.with_name(f"{p.stem}.{algo}{p.suffix}")


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.file))
    algos = ["one", "two"] if args.algo == "both" else [args.algo]
    for algo in algos:
        try:
            sol = solve_pipeline(g, algo, workers=args.workers)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        doc = sol.document()
        if args.output:
            out = _with_suffix(args.output, algo) if len(algos) > 1 else Path(args.output)
            out.write_text(doc)
        else:
            if len(algos) > 1:
                sys.stdout.write(f"# algo {algo}\n")
            sys.stdout.write(doc)
        if args.dot:
            dot = _with_suffix(args.dot, algo) if len(algos) > 1 else Path(args.dot)
            dot.write_text(to_dot(g, sol.phi6, sol.integer))
    return 0


def check_flow_document(g, records) -> list[str]:
    """Every problem found with a parsed flow document, as report lines."""
    problems = []
    missing = sorted(set(g.edge_ids) - set(records))
    extra = sorted(set(records) - set(g.edge_ids))
    if missing:
        problems.append(f"edges without a value: {missing}")
    if extra:
        problems.append(f"values for unknown edges: {extra}")
    if missing or extra:
        return problems
    pair = FlowPair({e: r.phi2 for e, r in records.items()}, {e: r.phi3 for e, r in records.items()})
    bad_range = [e for e, r in records.items() if r.phi2 not in (0, 1) or r.phi3 not in (0, 1, 2)]
    if bad_range:
        problems.append(f"phi2/phi3 not reduced residues on edges: {bad_range}")
    report = verify_pair(g, pair)
    if not report.ok:
        problems.append(report.describe())
    phi6 = crt_combine(pair)
    no6 = [e for e, r in records.items() if r.phi6 is None or r.value is None]
    if no6:
        problems.append(f"phi6/int columns missing on edges: {no6}")
        return problems
    crt_bad = [e for e, r in records.items() if r.phi6 != phi6[e]]
    if crt_bad:
        problems.append(f"phi6 is not the CRT combination of (phi2, phi3) on edges: {crt_bad}")
    integer = {e: r.value for e, r in records.items()}
    ir = verify_integer_flow(g, integer, phi6)
    if not ir.kirchhoff:
        problems.append(f"integer Kirchhoff fails at vertices: {ir.bad_vertices}")
    if not (ir.in_range and ir.congruent):
        problems.append(f"int not in ±1..5 or not congruent to phi6 mod 6 on edges: {ir.bad_edges}")
    return problems


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    docs = split_documents(_read(args.flow), "flow")
    if not docs:
        raise ParseError("no flow document found")
    status = 0
    for i, doc in enumerate(docs):
        problems = check_flow_document(g, parse_flow(doc))
        label = f"document {i + 1}: " if len(docs) > 1 else ""
        if problems:
            status = 1
            print(f"{label}FAIL")
            for p in problems:
                print(f"  {p}")
        else:
            print(f"{label}ok")
    return status


def cmd_convert(args) -> int:
    g = parse_graph(_read(args.graph))
    records = parse_flow(_read(args.flow))
    if set(records) != set(g.edge_ids):
        raise UsageError("flow document does not cover exactly the graph's edges")
    pair = FlowPair({e: r.phi2 for e, r in records.items()}, {e: r.phi3 for e, r in records.items()})
    report = verify_pair(g, pair)
    if not report.ok:
        print(report.describe(), file=sys.stderr)
        return 1
    phi6 = crt_combine(pair)
    integer = to_integer_flow(g, phi6) if g.m else {}
    assert verify_integer_flow(g, integer, phi6).ok
    sys.stdout.write(format_flow(pair.phi2, pair.phi3, phi6, integer))
    return 0


def cmd_oracle(args) -> int:
    g = parse_graph(_read(args.file))
    try:
        phi = oracle.find_nz_zk_flow(g, args.k, max_dim=args.max_dim)
    except oracle.DimensionGuardError as exc:
        raise UsageError(str(exc)) from None
    print("none" if phi is None else "exists")
    return 0


def cmd_gen(args) -> int:
    try:
        g = generate(args.name, n=args.n, m=args.m, seed=args.seed)
    except GeneratorError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(format_graph(g))
    return 0


def cmd_reduce(args) -> int:
    g = parse_graph(_read(args.file))
    try:
        trace = reduction.reduce(g)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    s = reduction.summary(trace)
    for kind, count in s["steps"].items():
        print(f"step {kind} {count}")
    for kind, n, m in s["leaves"]:
        print(f"leaf {kind} {n} {m}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nzflow", description="Nowhere-zero 6-flows on bridgeless multigraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a nowhere-zero 6-flow")
    s.add_argument("file")
    s.add_argument("--algo", choices=["one", "two", "both"], default="one")
    s.add_argument("-o", "--output", help="write the flow document here (both: NAME.one.EXT, NAME.two.EXT)")
    s.add_argument("--dot", help="also write a DOT rendering labelled phi6/int")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a flow document against a graph")
    v.add_argument("graph")
    v.add_argument("flow")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("convert", help="recompute phi6 and the integer flow from phi2/phi3")
    c.add_argument("graph")
    c.add_argument("flow")
    c.set_defaults(func=cmd_convert)

    o = sub.add_parser("oracle", help="exhaustive search for a nowhere-zero Z_k-flow")
    o.add_argument("file")
    o.add_argument("--k", type=int, required=True, choices=range(2, 7))
    o.add_argument("--max-dim", type=int, default=oracle.MAX_DIM)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="emit a graph document")
    g.add_argument("name", choices=sorted(NAMED))
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int)
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("reduce", help="print the reduction summary")
    r.add_argument("file")
    r.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"nzflow {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
