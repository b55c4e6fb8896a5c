"""Named and random graph families. Vertices are 1..n, edges are numbered 1..m."""

from __future__ import annotations

import random

from .cuts import is_k_edge_connected
from .graph import MultiGraph


class GeneratorError(ValueError):
    pass


def petersen() -> MultiGraph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return MultiGraph.from_pairs(outer + spokes + inner)


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_pairs([(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)])


def k4() -> MultiGraph:
    return complete(4)


def k5() -> MultiGraph:
    return complete(5)


def cycle(n: int) -> MultiGraph:
    if n < 2:
        raise GeneratorError("cycle needs n >= 2")
    return MultiGraph.from_pairs([(i, i % n + 1) for i in range(1, n + 1)])


def theta(m: int) -> MultiGraph:
    if m < 1:
        raise GeneratorError("theta needs m >= 1")
    return MultiGraph.from_pairs([(1, 2)] * m)


def prism(n: int) -> MultiGraph:
    """Circular ladder on n vertices (two n/2-cycles joined by rungs)."""
    if n < 6 or n % 2:
        raise GeneratorError("prism needs an even n >= 6")
    h = n // 2
    top = [(i, i % h + 1) for i in range(1, h + 1)]
    bottom = [(h + i, h + i % h + 1) for i in range(1, h + 1)]
    rungs = [(i, h + i) for i in range(1, h + 1)]
    return MultiGraph.from_pairs(top + bottom + rungs)


def moebius_ladder(n: int) -> MultiGraph:
    """n-cycle plus the n/2 long diagonals."""
    if n < 4 or n % 2:
        raise GeneratorError("moebius_ladder needs an even n >= 4")
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    diag = [(i, i + n // 2) for i in range(1, n // 2 + 1)]
    return MultiGraph.from_pairs(rim + diag)


def _orient_and_number(rng: random.Random, n: int, pairs) -> MultiGraph:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    out = []
    for a, b in pairs:
        a, b = perm[a - 1], perm[b - 1]
        if rng.random() < 0.5:
            a, b = b, a
        out.append((a, b))
    rng.shuffle(out)
    return MultiGraph.from_pairs(out, vertices=range(1, n + 1))


def random_cubic_3ec(n: int, seed: int = 0, budget: int = 1000) -> MultiGraph:
    """Hamiltonian cycle plus a random perfect matching, retried until simple and 3-edge-connected."""
    if n < 4 or n % 2:
        raise GeneratorError("random_cubic_3ec needs an even n >= 4")
    rng = random.Random(seed)
    for _ in range(budget):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        ring = {frozenset((order[i], order[(i + 1) % n])) for i in range(n)}
        rest = list(range(1, n + 1))
        rng.shuffle(rest)
        matching = [(rest[2 * i], rest[2 * i + 1]) for i in range(n // 2)]
        if any(frozenset(p) in ring for p in matching):
            continue
        pairs = [(order[i], order[(i + 1) % n]) for i in range(n)] + matching
        g = _orient_and_number(rng, n, pairs)
        if is_k_edge_connected(g, 3):
            return g
    raise GeneratorError(f"no 3-edge-connected cubic graph found in {budget} tries")


def random_2ec(n: int, m: int, seed: int = 0, max_ear: int = 4) -> MultiGraph:
    """Random 2-edge-connected multigraph built from a cycle by adding ears.

    Ears may be closed (both ends at one vertex), which produces cut vertices,
    and the leftover edge budget is spent on chords that may be parallel.
    """
    if n < 2 or m < n:
        raise GeneratorError("random_2ec needs n >= 2 and m >= n")
    rng = random.Random(seed)
    first = n if m == n else rng.randint(2, min(n, 2 + rng.randint(0, n)))
    pairs = [(i, i % first + 1) for i in range(1, first + 1)]
    if first == 2:
        pairs = [(1, 2), (2, 1)]
    have = first
    ears_left = m - n
    while have < n:
        remaining = n - have
        k = remaining if ears_left == 1 else rng.randint(1, min(remaining, max_ear))
        a = rng.randint(1, have)
        b = a if rng.random() < 0.25 else rng.randint(1, have)
        path = [a] + list(range(have + 1, have + k + 1)) + [b]
        pairs.extend(zip(path, path[1:]))
        have += k
        ears_left -= 1
    while len(pairs) < m:
        a, b = rng.sample(range(1, n + 1), 2)
        pairs.append((a, b))
    return _orient_and_number(rng, n, pairs)


NAMED = {
    "petersen": lambda n, m, seed: petersen(),
    "k4": lambda n, m, seed: k4(),
    "k5": lambda n, m, seed: k5(),
    "c": lambda n, m, seed: cycle(_need(n, "n")),
    "theta": lambda n, m, seed: theta(_need(m, "m")),
    "prism": lambda n, m, seed: prism(_need(n, "n")),
    "moebius_ladder": lambda n, m, seed: moebius_ladder(_need(n, "n")),
    "random_cubic_3ec": lambda n, m, seed: random_cubic_3ec(_need(n, "n"), seed or 0),
    "random_2ec": lambda n, m, seed: random_2ec(_need(n, "n"), _need(m, "m"), seed or 0),
}


def _need(x, name):
    if x is None:
        raise GeneratorError(f"--{name} is required for this generator")
    return x


def generate(name: str, n: int | None = None, m: int | None = None, seed: int | None = None) -> MultiGraph:
    try:
        make = NAMED[name]
    except KeyError:
        raise GeneratorError(f"unknown generator {name!r}; choose from {sorted(NAMED)}") from None
    return make(n, m, seed)


def corpus(size: int = 240, seed: int = 2024, max_n: int = 40) -> list[tuple[str, MultiGraph]]:
    """Fixed-seed mix of named graphs, random cubic graphs and random bridgeless multigraphs."""
    rng = random.Random(seed)
    out: list[tuple[str, MultiGraph]] = [
        ("petersen", petersen()),
        ("k4", k4()),
        ("k5", k5()),
        ("c4", cycle(4)),
        ("c5", cycle(5)),
        ("theta3", theta(3)),
        ("theta4", theta(4)),
        ("prism6", prism(6)),
        ("prism10", prism(10)),
        ("moebius8", moebius_ladder(8)),
    ]
    i = 0
    while len(out) < size:
        i += 1
        s = rng.randrange(1 << 30)
        if i % 6 == 0:
            n = rng.choice(range(4, min(max_n, 30) + 1, 2))
            out.append((f"random_cubic_3ec({n},{s})", random_cubic_3ec(n, s)))
        else:
            n = rng.randint(2, 12) if i % 3 else rng.randint(2, max_n)
            m = n + rng.randint(0, max(1, n // 2 + 2))
            out.append((f"random_2ec({n},{m},{s})", random_2ec(n, m, s)))
    return out
