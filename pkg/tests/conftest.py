import itertools

from hypothesis import settings, strategies as st

from nzflow.generators import random_2ec, random_cubic_3ec
from nzflow.graph import MultiGraph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def bridgeless_graphs(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    m = n + draw(st.integers(0, n // 2 + 2))
    return random_2ec(n, m, draw(st.integers(0, 2**30)))


@st.composite
def cubic_3ec_graphs(draw, max_n=16):
    n = draw(st.sampled_from(range(4, max_n + 1, 2)))
    return random_cubic_3ec(n, draw(st.integers(0, 2**30)))


@st.composite
def multigraphs(draw, max_n=7, max_m=10):
    """Arbitrary loopless multigraphs, possibly disconnected."""
    n = draw(st.integers(1, max_n))
    if n == 1:
        return MultiGraph([1])
    pairs = draw(
        st.lists(
            st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1]),
            max_size=max_m,
        )
    )
    return MultiGraph.from_pairs(pairs, vertices=range(1, n + 1))


def all_multigraphs(n, max_m):
    """Every edge multiset on vertices 1..n with at most max_m edges, oriented low -> high."""
    slots = list(itertools.combinations(range(1, n + 1), 2))
    for m in range(max_m + 1):
        for combo in itertools.combinations_with_replacement(slots, m):
            yield MultiGraph.from_pairs(combo, vertices=range(1, n + 1))


def connected_after_removing(g, edges):
    return len(g.components(without_edges=edges)) == 1


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
