from itertools import product

import pytest
from hypothesis import given, settings

from sympoly.ehrhart import (
    ehrhart_from_hstar, gamma_vector, h_star, hstar_from_gamma, hstar_from_values,
    lattice_points, polar_dual_points,
)
from sympoly.errors import NonPalindromicHStar, SizeBudgetExceeded
from sympoly.exact import Poly
from sympoly.families import convolve, edge_join_hstar, vertex_join_hstar
from sympoly.graph import (
    Graph, complete_graph, cycle_graph, edge_join, path_graph, vertex_join, wheel_graph,
)
from sympoly.oracles import box_lattice_points

from strategies import connected_graphs


def test_c4_ehrhart_values():
    assert [lattice_points(cycle_graph(4), j) for j in range(4)] == [1, 9, 35, 91]


@settings(max_examples=25, deadline=None)
@given(connected_graphs(n_max=5))
def test_lattice_points_match_transport_oracle(g):
    for j in range(3):
        assert lattice_points(g, j) == box_lattice_points(g, j)


@pytest.mark.parametrize("g,hstar,gamma", [
    (cycle_graph(4), [1, 5, 5, 1], (1, 2)),
    (cycle_graph(6), [1, 7, 22, 22, 7, 1], (1, 2, 6)),
    (complete_graph(3), [1, 4, 1], (1, 2)),
    (path_graph(4), [1, 3, 3, 1], (1, 0)),
    (edge_join(cycle_graph(4), cycle_graph(4)), [1, 9, 26, 26, 9, 1], (1, 4, 4)),
    (edge_join(complete_graph(3), cycle_graph(4)), [1, 8, 18, 8, 1], (1, 4, 4)),
])
def test_hstar_and_gamma(g, hstar, gamma):
    d = h_star(g)
    assert d.hstar.int_coeffs() == hstar
    assert d.gamma == gamma
    assert hstar_from_gamma(gamma, d.dim) == d.hstar


@settings(max_examples=25, deadline=None)
@given(connected_graphs(n_max=5))
def test_hstar_is_palindromic_reflexive(g):
    d = h_star(g)
    assert d.hstar[0] == 1
    assert d.hstar.is_palindromic(d.dim)
    assert all(c >= 0 for c in d.hstar.coeffs)
    assert [ehrhart_from_hstar(d.hstar, d.dim, j) for j in range(d.dim + 3)] == \
        [int(d.ehrhart(j)) for j in range(d.dim + 3)]


def test_ehrhart_polynomial_predicts_next_dilate():
    g = cycle_graph(4)
    d = h_star(g)
    assert d.ehrhart(4) == lattice_points(g, 4)
    assert d.ehrhart(5) == lattice_points(g, 5)


def test_edge_and_vertex_join_identities():
    c4, k3 = h_star(cycle_graph(4)), h_star(complete_graph(3))
    joined = h_star(edge_join(cycle_graph(4), cycle_graph(4)))
    assert joined.hstar == edge_join_hstar(c4.hstar, c4.hstar)
    assert joined.gamma == convolve(c4.gamma, c4.gamma)
    mixed = h_star(edge_join(complete_graph(3), cycle_graph(4)))
    assert mixed.hstar == edge_join_hstar(k3.hstar, c4.hstar)
    assert mixed.gamma == convolve(k3.gamma, c4.gamma)
    vj = h_star(vertex_join(cycle_graph(4), complete_graph(3)))
    assert vj.hstar == vertex_join_hstar(c4.hstar, k3.hstar)


def test_hstar_from_values_inverts_ehrhart():
    h = Poly([1, 5, 5, 1])
    vals = [ehrhart_from_hstar(h, 3, j) for j in range(4)]
    assert hstar_from_values(vals, 3) == h


def test_gamma_rejects_non_palindromic():
    with pytest.raises(NonPalindromicHStar):
        gamma_vector(Poly([1, 2, 3]), 2)
    with pytest.raises(AssertionError):
        gamma_vector(Poly([1, 2, 3]), 2)


def test_lattice_budget():
    with pytest.raises(SizeBudgetExceeded):
        lattice_points(complete_graph(9), 1)


def _brute_dual_points(g):
    """Scan a box wider than any feasible labeling."""
    count = 0
    for rest in product(range(-g.n, g.n + 1), repeat=g.n - 1):
        f = (0,) + rest
        if all(abs(f[u] - f[v]) <= 1 for u, v in g.edges):
            count += 1
    return count


@pytest.mark.parametrize("g,count", [
    (cycle_graph(4), 19), (cycle_graph(6), 141), (path_graph(2), 3), (Graph(1, ()), 1),
])
def test_polar_dual_points(g, count):
    assert polar_dual_points(g) == count


@settings(max_examples=30, deadline=None)
@given(connected_graphs(n_max=5))
def test_polar_dual_points_match_scan(g):
    assert polar_dual_points(g) == _brute_dual_points(g)


def test_wheel_hstar_volume():
    assert h_star(wheel_graph(5)).volume == 152
