import pytest

from nzflow.cuts import is_k_edge_connected
from nzflow.generators import (
    GeneratorError,
    corpus,
    cycle,
    generate,
    moebius_ladder,
    petersen,
    prism,
    random_2ec,
    random_cubic_3ec,
    theta,
)
from nzflow.graph import degree_sequence, is_cubic


def test_petersen_shape():
    g = petersen()
    assert (g.n, g.m) == (10, 15)
    assert is_cubic(g) and is_k_edge_connected(g, 3)


def test_theta_and_cycle():
    assert theta(3).edges == {1: (1, 2), 2: (1, 2), 3: (1, 2)}
    assert cycle(2).m == 2 and cycle(2).n == 2
    assert degree_sequence(cycle(7)) == [2] * 7


def test_ladders():
    for n in (6, 8, 12):
        assert is_cubic(prism(n)) and is_k_edge_connected(prism(n), 3)
    for n in (4, 8, 10):
        assert is_cubic(moebius_ladder(n)) and is_k_edge_connected(moebius_ladder(n), 3)


def test_random_cubic_is_deterministic():
    a = random_cubic_3ec(12, seed=7)
    b = random_cubic_3ec(12, seed=7)
    assert a == b
    assert a != random_cubic_3ec(12, seed=8)
    assert is_cubic(a) and is_k_edge_connected(a, 3)
    assert sorted(a.edge_ids) == list(range(1, 19))


def test_random_2ec_shape():
    for seed in range(50):
        g = random_2ec(9, 12, seed)
        assert (g.n, g.m) == (9, 12)
        assert is_k_edge_connected(g, 2)
    assert random_2ec(9, 12, 3) == random_2ec(9, 12, 3)


@pytest.mark.parametrize(
    "call",
    [
        lambda: cycle(1),
        lambda: theta(0),
        lambda: prism(7),
        lambda: moebius_ladder(2),
        lambda: random_cubic_3ec(5),
        lambda: random_2ec(5, 4),
        lambda: generate("nope"),
        lambda: generate("c"),
    ],
)
def test_parameter_errors(call):
    with pytest.raises(GeneratorError):
        call()


def test_corpus_fixed():
    a = corpus(30)
    assert [name for name, _ in a] == [name for name, _ in corpus(30)]
    assert len(a) == 30
    assert all(is_k_edge_connected(g, 2) for _, g in a)
