import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nzflow.generators import cycle, k4, petersen, theta
from nzflow.graph import MultiGraph
from nzflow.oracle import (
    DimensionGuardError,
    accepts,
    cycle_basis,
    find_nz_zk_flow,
    is_nz_zk_flow,
)

from conftest import bridgeless_graphs, multigraphs


def raw_exists(g, k):
    """Every assignment of 1..k-1 to every edge; independent of the cycle basis."""
    for vals in itertools.product(range(1, k), repeat=g.m):
        if is_nz_zk_flow(g, dict(zip(g.edge_ids, vals)), k):
            return True
    return False


def lexicographic_first(g, k):
    basis = cycle_basis(g)
    for coeffs in itertools.product(range(k), repeat=basis.dim):
        phi = {e: 0 for e in g.edge_ids}
        for c, vec in zip(coeffs, basis.cycles):
            for e, s in vec.items():
                phi[e] += c * s
        phi = {e: x % k for e, x in phi.items()}
        if all(phi.values()):
            return phi
    return None


def test_cycle_basis_examples():
    tree = MultiGraph.from_pairs([(1, 2), (2, 3), (2, 4)])
    assert cycle_basis(tree).dim == 0
    c5 = cycle_basis(cycle(5))
    assert c5.dim == 1 and set(c5.cycles[0]) == {1, 2, 3, 4, 5}
    assert cycle_basis(petersen()).dim == 6


@given(multigraphs())
def test_basis_vectors_are_circulations(g):
    basis = cycle_basis(g)
    assert basis.dim == g.m - g.n + len(g.components())
    for vec in basis.cycles:
        assert set(vec.values()) <= {-1, 1}
        net = {v: 0 for v in g.vertices}
        for e, s in vec.items():
            t, h = g.ends(e)
            net[t] += s
            net[h] -= s
        assert not any(net.values())


def test_k4_frozen_by_raw_enumeration():
    # raw enumeration: 2^6 and 3^6 assignments
    assert raw_exists(k4(), 3) is False
    assert raw_exists(k4(), 4) is True
    assert find_nz_zk_flow(k4(), 3) is None
    phi = find_nz_zk_flow(k4(), 4)
    assert phi is not None and accepts(k4(), phi, 4)


def test_petersen_has_no_nz_4_flow():
    assert find_nz_zk_flow(petersen(), 4) is None
    phi = find_nz_zk_flow(petersen(), 5)
    assert phi is not None and accepts(petersen(), phi, 5)


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_cycles_have_z2_flows(n):
    assert find_nz_zk_flow(cycle(n), 2) == {e: 1 for e in cycle(n).edge_ids}


def test_theta3():
    assert find_nz_zk_flow(theta(3), 2) is None
    assert find_nz_zk_flow(theta(3), 3) is not None


def test_dimension_guard():
    g = MultiGraph.from_pairs([(1, 2)] * 14)
    with pytest.raises(DimensionGuardError):
        find_nz_zk_flow(g, 2)


@settings(max_examples=40)
@given(multigraphs(max_n=5, max_m=7), st.integers(2, 4))
def test_existence_matches_raw_enumeration(g, k):
    assert (find_nz_zk_flow(g, k) is not None) == raw_exists(g, k)


@settings(max_examples=40)
@given(bridgeless_graphs(max_n=7), st.integers(2, 5))
def test_first_witness_is_lexicographic(g, k):
    if cycle_basis(g).dim > 6:
        return
    assert find_nz_zk_flow(g, k) == lexicographic_first(g, k)


@given(bridgeless_graphs(max_n=10))
def test_monotone_in_k(g):
    if cycle_basis(g).dim > 8:
        return
    found = [find_nz_zk_flow(g, k) is not None for k in range(2, 7)]
    assert found == sorted(found)
    assert found[-1]


def test_accepts_rejects_broken_flow():
    g = k4()
    phi = find_nz_zk_flow(g, 4)
    assert accepts(g, phi, 4)
    broken = dict(phi)
    broken[1] = (broken[1] + 1) % 4 or 1
    assert not accepts(g, broken, 4)
