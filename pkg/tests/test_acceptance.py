"""Acceptance criteria, one test per criterion.

Each test appends a ``criterion N: PASS|FAIL ...`` line that is printed in the
terminal summary, then asserts.
"""

import itertools
import time
from collections import Counter

import pytest

from nzflow import oracle, reduction, solver_one, solver_two
from nzflow.cuts import cut_vertices, quotient_cycle_order, series_classes, two_edge_cuts
from nzflow.flows import crt_combine, to_integer_flow, verify_pair
from nzflow.generators import corpus, cycle, k4, petersen, theta
from nzflow.graph import is_cubic
from nzflow.pipeline import solve_pipeline

from conftest import ACCEPTANCE_LINES, all_multigraphs, connected_after_removing

BACKENDS = ("one", "two")


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def graphs():
    return corpus()


@pytest.fixture(scope="module")
def solved(graphs):
    """Solutions for every corpus graph and backend, with the wall time it took."""
    t0 = time.perf_counter()
    out = {}
    for name, g in graphs:
        for b in BACKENDS:
            out[name, b] = solve_pipeline(g, b)
    return out, time.perf_counter() - t0


def brute_series_classes(g):
    cls = {e: {e} for e in g.edge_ids}
    for e, f in itertools.combinations(g.edge_ids, 2):
        if not connected_after_removing(g, (e, f)):
            cls[e].add(f)
            cls[f].add(e)
    return sorted({frozenset(c) for c in cls.values()}, key=min)


def brute_k_edge_connected(g, k):
    return g.is_connected() and all(
        connected_after_removing(g, es) for r in range(1, k) for es in itertools.combinations(g.edge_ids, r)
    )


def is_quotient_cycle(g, F, order):
    """Components partition V, each is connected in g - F, and links[k] joins G_k to G_{k+1}."""
    comps = order.components
    ell = len(F)
    if len(comps) != ell or sorted(order.links) != sorted(F):
        return False
    if sorted(v for c in comps for v in c) != sorted(g.vertices):
        return False
    rest = g.delete_edges(F)
    if any(len(rest.subgraph(c).components()) != 1 for c in comps):
        return False
    for k, f in enumerate(order.links):
        a, b = g.ends(f)
        here, there = comps[k], comps[(k + 1) % ell]
        if not ((a in here and b in there) or (b in here and a in there)):
            return False
        if order.forward[k] != (a in here):
            return False
    return True


def test_criterion_1_existence_suite(graphs, solved):
    sols, elapsed = solved
    feats = Counter()
    for _, g in graphs:
        pairs = Counter(frozenset(g.ends(e)) for e in g.edge_ids)
        feats["parallel"] += any(c > 1 for c in pairs.values())
        feats["cut_vertex"] += bool(cut_vertices(g))
        feats["two_cut"] += bool(two_edge_cuts(g))
        feats["deg4"] += any(g.degree(v) >= 4 for v in g.vertices)
        feats["bridgeless"] += brute_k_edge_connected(g, 2)
    max_n = max(g.n for _, g in graphs)
    verified = sum(verify_pair(g, sols[name, b].pair).ok for name, g in graphs for b in BACKENDS)
    ok = (
        len(graphs) >= 200
        and max_n <= 40
        and feats["bridgeless"] == len(graphs)
        and all(feats[k] > 0 for k in ("parallel", "cut_vertex", "two_cut", "deg4"))
        and verified == 2 * len(graphs)
        and elapsed < 10.0
    )
    report(
        1,
        ok,
        f"{len(graphs)} graphs (n<={max_n}; parallel {feats['parallel']}, cut vertex {feats['cut_vertex']}, "
        f"2-cut {feats['two_cut']}, deg>=4 {feats['deg4']}), {verified}/{2 * len(graphs)} pairs verified "
        f"in {elapsed:.2f}s (limit 10s)",
    )


def test_criterion_2_petersen_certificate():
    g = petersen()
    t0 = time.perf_counter()
    witness = oracle.find_nz_zk_flow(g, 4)
    elapsed = time.perf_counter() - t0
    dim = oracle.cycle_basis(g).dim
    backends_ok = all(verify_pair(g, solve_pipeline(g, b).pair).ok for b in BACKENDS)
    ok = witness is None and dim == 6 and 4**dim == 4096 and elapsed < 1.0 and backends_ok
    report(2, ok, f"no Z4-flow on Petersen ({4**dim} combinations, {elapsed:.3f}s); both backends verified: {backends_ok}")


def test_criterion_3_oracle_cross_check(graphs, solved):
    sols, _ = solved
    small = [(name, g) for name, g in graphs if oracle.cycle_basis(g).dim <= 10]
    missing = [name for name, g in small if oracle.find_nz_zk_flow(g, 6) is None]
    rejected = [
        (name, b) for name, g in small for b in BACKENDS if not oracle.accepts(g, crt_combine(sols[name, b].pair), 6)
    ]
    # the crt reduction of every solver output, not just the small ones, must be a Z6-flow
    not_flow = [
        (name, b) for name, g in graphs for b in BACKENDS if not oracle.is_nz_zk_flow(g, crt_combine(sols[name, b].pair), 6)
    ]
    ok = len(small) > 0 and not missing and not rejected and not not_flow
    report(
        3,
        ok,
        f"{len(small)} graphs with dim<=10: oracle Z6 witness missing on {len(missing)}, "
        f"solver outputs rejected {len(rejected)}; non-flows over full corpus {len(not_flow)}",
    )


def test_criterion_4_integer_conversion(graphs, solved):
    sols, _ = solved
    bad = []
    for name, g in graphs:
        for b in BACKENDS:
            phi6 = crt_combine(sols[name, b].pair)
            f = to_integer_flow(g, phi6) if g.m else {}
            net = Counter()
            for e, (t, h) in g.edges.items():
                net[t] += f[e]
                net[h] -= f[e]
            if (
                any(net[v] for v in g.vertices)
                or any(not 1 <= abs(f[e]) <= 5 for e in g.edge_ids)
                or any((f[e] - phi6[e]) % 6 for e in g.edge_ids)
                or f != sols[name, b].integer
            ):
                bad.append((name, b))
    report(4, not bad, f"{2 * len(graphs) - len(bad)}/{2 * len(graphs)} integer flows exact")


def test_criterion_5_small_flow_facts():
    t0 = time.perf_counter()
    facts = {
        "K4 has Z4": oracle.find_nz_zk_flow(k4(), 4) is not None,
        "K4 lacks Z3": oracle.find_nz_zk_flow(k4(), 3) is None,
        "cycles C2..C12 have Z2": all(oracle.find_nz_zk_flow(cycle(n), 2) is not None for n in range(2, 13)),
        "theta(3) has Z3": oracle.find_nz_zk_flow(theta(3), 3) is not None,
        "theta(3) lacks Z2": oracle.find_nz_zk_flow(theta(3), 2) is None,
    }
    elapsed = time.perf_counter() - t0
    failed = [k for k, v in facts.items() if not v]
    report(5, not failed and elapsed < 1.0, f"{len(facts) - len(failed)}/{len(facts)} facts in {elapsed:.3f}s (limit 1s)")


def test_criterion_6_structural_suites(graphs):
    assert __debug__, "run with assertions enabled"
    # series classes versus exhaustive pair removal
    small = [g for _, g in graphs if g.m <= 10]
    small += [
        g
        for n, max_m in ((2, 10), (3, 10), (4, 10), (5, 7), (6, 6))
        for g in all_multigraphs(n, max_m)
        if g.m and brute_k_edge_connected(g, 2)
    ]
    class_mismatch = sum(series_classes(g) != brute_series_classes(g) for g in small)

    # every class of size >= 2 quotients to a cycle
    n_classes = bad_orders = 0
    for _, g in graphs:
        for F in series_classes(g):
            if len(F) >= 2:
                n_classes += 1
                bad_orders += not is_quotient_cycle(g, F, quotient_cycle_order(g, F))

    # reduction leaves, and every solver instance checked against its hypotheses
    n_leaves = bad_leaves = 0
    instances = Counter()
    for _, g in graphs:
        for leaf in reduction.leaves(reduction.reduce(g)):
            n_leaves += 1
            h = leaf.graph
            if leaf.kind == "cubic":
                bad_leaves += not (is_cubic(h) and brute_k_edge_connected(h, 3))
                solver_one.solve_cubic(h, check=True, observer=lambda inst: instances.update(["one"]))
                solver_two.solve_cubic(h, check=True, observer=lambda inst, case: instances.update(["two"]))
            else:
                bad_leaves += not (h.n <= 2 and brute_k_edge_connected(h, 2))

    ok = class_mismatch == 0 and bad_orders == 0 and bad_leaves == 0 and instances["one"] and instances["two"]
    report(
        6,
        ok,
        f"series classes {len(small) - class_mismatch}/{len(small)} graphs match brute force; "
        f"{n_classes - bad_orders}/{n_classes} quotient cycles; {n_leaves - bad_leaves}/{n_leaves} leaves; "
        f"{instances['one']} + {instances['two']} solver instances checked",
    )


def test_criterion_7_determinism(graphs, solved):
    sols, _ = solved
    again = corpus()
    same_corpus = [(a, g.edges) for a, g in again] == [(a, g.edges) for a, g in graphs]
    rerun_diff = [
        (name, b) for name, g in graphs for b in BACKENDS if solve_pipeline(g, b).document() != sols[name, b].document()
    ]
    multi = [(name, g) for name, g in graphs if len(reduction.leaves(reduction.reduce(g))) > 1]
    pool_diff = [
        (name, b)
        for name, g in multi
        for b in BACKENDS
        if solve_pipeline(g, b, workers=4).document() != sols[name, b].document()
    ]
    ok = same_corpus and not rerun_diff and not pool_diff
    report(
        7,
        ok,
        f"corpus regenerated identically: {same_corpus}; rerun differences {len(rerun_diff)}; "
        f"workers=4 differences {len(pool_diff)} over {len(multi)} multi-leaf graphs",
    )
