import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from sympoly.errors import DisconnectedGraph, InvalidGraph, SizeBudgetExceeded
from sympoly.graph import (
    Graph, bfs_order, closure, complete_graph, components, contract, cycle_graph,
    distances, edge_join, flats, is_bipartite, laplacian, load_graph, matrix_tree_count,
    parse_graph_text, path_graph, simple_cycles, spanning_tree_masks, spanning_trees,
    star_graph, vertex_join, wheel_graph,
)
from sympoly.oracles import kirchhoff_count, random_graph


@st.composite
def graphs(draw, n_max=7, connected=False):
    n = draw(st.integers(1, n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = Graph(n, tuple(chosen))
    if connected:
        from hypothesis import assume
        assume(g.is_connected())
    return g


def test_rejects_loops_and_parallel_edges():
    with pytest.raises(InvalidGraph):
        Graph(2, ((0, 0),))
    with pytest.raises(InvalidGraph):
        Graph(2, ((0, 1), (1, 0)))
    with pytest.raises(InvalidGraph):
        Graph(2, ((0, 2),))


def test_builders():
    assert cycle_graph(5).m == 5 and cycle_graph(5).n == 5
    assert complete_graph(5).m == 10
    assert star_graph(4).m == 3
    w = wheel_graph(5)
    assert w.n == 6 and w.m == 10
    assert w.edges[:5] == ((1, 2), (2, 3), (3, 4), (4, 5), (5, 1))
    assert all(0 in e for e in w.edges[5:])


def test_vertex_and_edge_join_sizes():
    g = vertex_join(cycle_graph(4), cycle_graph(3))
    assert (g.n, g.m) == (6, 7)
    h = edge_join(cycle_graph(4), cycle_graph(4))
    assert (h.n, h.m) == (6, 7)
    assert h.edges[:4] == cycle_graph(4).edges


def test_parse_json_and_edge_list(tmp_path):
    g = cycle_graph(4)
    p = tmp_path / "c4.json"
    p.write_text(json.dumps(g.to_json()))
    assert load_graph(p) == g
    q = tmp_path / "c4.txt"
    q.write_text("# square\n0 1\n1 2\n2 3\n3 0\n")
    assert load_graph(q) == g
    assert parse_graph_text("0 1\n0 1\n") == (None, [(0, 1), (0, 1)])
    with pytest.raises(InvalidGraph):
        parse_graph_text("0 1 2\n")


@given(graphs())
def test_json_round_trip(g):
    assert Graph.from_json(json.loads(json.dumps(g.to_json()))) == g


def test_distances_and_bfs():
    g = cycle_graph(6)
    assert distances(g, 0) == {0: 0, 1: 1, 5: 1, 2: 2, 4: 2, 3: 3}
    order, parent = bfs_order(g, 0)
    assert order[0] == 0 and set(order) == set(range(6))
    with pytest.raises(DisconnectedGraph):
        distances(Graph(3, ((0, 1),)), 0)


def test_bipartite():
    assert is_bipartite(cycle_graph(4)) is not None
    assert is_bipartite(cycle_graph(5)) is None
    a, b = is_bipartite(path_graph(4))
    assert a | b == frozenset(range(4)) and not a & b


@settings(max_examples=300, deadline=None)
@given(graphs())
def test_spanning_tree_enumeration_matches_kirchhoff(g):
    enumerated = sum(1 for _ in spanning_tree_masks(g.n, g.edges))
    assert enumerated == matrix_tree_count(g) == kirchhoff_count(g)


def test_spanning_trees_1000_random_graphs():
    rng = random.Random(11)
    for _ in range(1000):
        g = random_graph(rng, 7)
        assert sum(1 for _ in spanning_tree_masks(g.n, g.edges)) == matrix_tree_count(g)


@given(graphs(connected=True))
@settings(deadline=None)
def test_spanning_trees_are_trees(g):
    seen = set()
    for t in spanning_trees(g):
        assert len(t) == g.n - 1
        assert components(g.n, [g.edges[r] for r in t]) == 1
        seen.add(t)
    assert len(seen) == matrix_tree_count(g)


def test_forbidden_masks_prune():
    g = cycle_graph(4)
    # forbid edges 0 and 1 together: kills the two trees holding both
    trees = list(spanning_tree_masks(g.n, g.edges, [0b0011]))
    assert len(trees) == 2 and all(t & 0b11 != 0b11 for t in trees)


def test_laplacian_rows_sum_to_zero():
    L = laplacian(wheel_graph(4))
    assert all(sum(row) == 0 for row in L)
    assert matrix_tree_count(complete_graph(5)) == 5 ** 3


def test_simple_cycles():
    assert len(simple_cycles(complete_graph(4))) == 7
    assert len(simple_cycles(complete_graph(5))) == 37
    assert simple_cycles(cycle_graph(5)) == [(0, 1, 2, 3, 4)]
    assert simple_cycles(path_graph(5)) == []


def test_contract_simplifies():
    h = contract(cycle_graph(3), [0])
    assert (h.n, h.m) == (2, 1)
    assert contract(cycle_graph(4), range(4)).n == 1


def test_closure():
    g = cycle_graph(4)
    assert closure(g, [0, 1, 2]) == frozenset(range(4))
    assert closure(g, [0, 1]) == frozenset({0, 1})


def test_flats_of_triangle_and_square():
    lat = flats(cycle_graph(3))
    assert len(lat.flats) == 5
    assert lat.mobius(lat.bottom, lat.top) == 2
    # boolean lattice on a tree
    lat = flats(path_graph(4))
    assert len(lat.flats) == 8
    assert lat.mobius(lat.bottom, lat.top) == -1
    assert lat.mobius_bottom[lat.top] == lat.mobius(lat.bottom, lat.top)


def test_flats_mobius_of_complete_graph_is_partition_lattice():
    # mu of the partition lattice of an n-set is (-1)^(n-1) (n-1)!
    for n, want in [(3, 2), (4, -6)]:
        lat = flats(complete_graph(n))
        assert lat.mobius(lat.bottom, lat.top) == want


def test_flats_budget():
    with pytest.raises(SizeBudgetExceeded):
        flats(complete_graph(7), cap=20)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("SYMPOLY_BUDGET", "flat_edges=3")
    with pytest.raises(SizeBudgetExceeded):
        flats(cycle_graph(4))
