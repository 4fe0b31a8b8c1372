from math import comb

import pytest

from sympoly.ehrhart import h_star
from sympoly.errors import NonDivisible, NonIntegralResult, NotAFacetWord
from sympoly.exact import Poly
from sympoly.facets import count_facets, enumerate_facets, face_lattice, incidence
from sympoly.families import (
    Complete, Cycle, EdgeJoinOddCycles, OuterplanarBipartite, Tree, Wheel, complete_graph_facets,
    cycle_fvector, cycle_invariants, edge_join_facets, edge_join_hstar, invariants,
    is_exceptional_word, is_wheel_facet_word, odd_cycles_edge_join_volume,
    outerplanar_bipartite, per_facet_wheel_volume, tree_invariants, wheel_facets,
    wheel_facets_series, wheel_volume, wheel_word_c, wheel_word_labeling,
)
from sympoly.genfun import BadWordSet, gj_cyclic
from sympoly.graph import (
    Graph, complete_graph, cycle_graph, edge_join, path_graph, star_graph, wheel_graph,
)
from sympoly.volume import facet_volume, forbidden_sets, normalized_volume


@pytest.mark.parametrize("k", [2, 3, 4])
def test_even_cycles(k):
    g = cycle_graph(2 * k)
    inv = cycle_invariants(k)
    assert inv["facets"] == count_facets(g) == comb(2 * k, k)
    assert inv["volume"] == normalized_volume(g)


@pytest.mark.parametrize("k", [2, 3])
def test_cycle_fvector_matches_face_lattice(k):
    assert cycle_fvector(k) == face_lattice(incidence(cycle_graph(2 * k)))[0]


def test_cycle_fvector_example():
    assert cycle_fvector(2) == [8, 12, 6]
    assert cycle_fvector(3) == [12, 60, 120, 90, 20]


@pytest.mark.parametrize("n", range(2, 7))
def test_trees(n):
    inv = tree_invariants(n)
    for g in (path_graph(n), star_graph(n)):
        assert count_facets(g) == inv["facets"]
        assert normalized_volume(g) == inv["volume"]
    if n <= 5:
        assert h_star(path_graph(n)).hstar == inv["hstar"]


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graph_facets(n):
    assert complete_graph_facets(n) == count_facets(complete_graph(n))


def test_edge_join_of_bipartite_graphs():
    a, b = cycle_graph(4), cycle_graph(6)
    assert edge_join_facets(count_facets(a), count_facets(b)) == count_facets(edge_join(a, b))
    with pytest.raises(NonDivisible):
        edge_join_facets(3, 5)
    with pytest.raises(NonDivisible):
        edge_join_hstar(Poly([1, 1, 1]), Poly([1, 1, 1]))


@pytest.mark.parametrize("i,j", [(1, 1), (1, 2), (2, 2)])
def test_glued_odd_cycles(i, j):
    g = edge_join(cycle_graph(2 * i + 1), cycle_graph(2 * j + 1))
    assert odd_cycles_edge_join_volume(i, j) == normalized_volume(g)


def test_wheel_facets_series_and_recursion():
    series = wheel_facets_series(30)
    cyclic = gj_cyclic(BadWordSet.from_strings(["+-", "-+", "000"], alphabet="+0-")).series(30)
    assert series[3:] == [int(c) for c in cyclic[3:]]
    for n in range(7, 31):
        assert series[n] == 2 * series[n - 1] + series[n - 2] - 2 * series[n - 4]
    assert [wheel_facets(n) for n in range(3, 31)] == series[3:]


def test_wheel_recursion_fails_below_seven():
    # the numerator of the generating function has degree 6
    s = wheel_facets_series(6)
    assert s[6] != 2 * s[5] + s[4] - 2 * s[2]


@pytest.mark.parametrize("n", range(3, 8))
def test_wheel_facets_match_enumeration(n):
    assert wheel_facets(n) == count_facets(wheel_graph(n))


@pytest.mark.parametrize("n,vol", [(3, 20), (4, 54), (5, 152), (6, 414), (7, 1136)])
def test_wheel_volume(n, vol):
    assert wheel_volume(n) == vol
    if n <= 6:
        assert normalized_volume(wheel_graph(n)) == vol


@pytest.mark.parametrize("n", range(3, 8))
def test_per_facet_wheel_volumes(n):
    g = wheel_graph(n)
    forb = forbidden_sets(g)
    total = 0
    for f in enumerate_facets(g):
        word = f[1:]
        assert is_wheel_facet_word(word)
        assert wheel_word_labeling(word) == f
        count, _ = facet_volume(g, f, forb)
        assert count == per_facet_wheel_volume(word)
        total += count
    assert total == wheel_volume(n)


def test_wheel_words():
    assert is_wheel_facet_word("+0+0")
    assert not is_wheel_facet_word("+-0")
    assert not is_wheel_facet_word("000+")
    assert wheel_word_c("+0+0") == 2
    assert is_exceptional_word("0-0-") and not is_exceptional_word("+0-0")
    assert per_facet_wheel_volume("+0+0") == 3
    with pytest.raises(NotAFacetWord):
        per_facet_wheel_volume("+-+")
    with pytest.raises(NotAFacetWord):
        per_facet_wheel_volume("+x+")


def test_outerplanar_examples():
    assert outerplanar_bipartite((2, 2, 2, 2, 3), 3, 3) == {"facets": 25920, "volume": 1244160}
    assert outerplanar_bipartite((2,), 0, 4) == {"facets": 96, "volume": 192}
    with pytest.raises(NonIntegralResult):
        outerplanar_bipartite((2,), 5, 0)


def test_outerplanar_against_enumeration():
    # two squares sharing an edge, with one pendant edge: a=(2,2), s=1, t=1
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2), (3, 6)])
    want = outerplanar_bipartite((2, 2), 1, 1)
    assert want == {"facets": count_facets(g), "volume": normalized_volume(g)}
    # a chain of four squares and a hexagon linked by a three-edge path
    chain = [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2), (4, 6), (6, 7), (7, 5),
             (6, 8), (8, 9), (9, 7)]
    hexagon = [(12, 13), (13, 14), (14, 15), (15, 16), (16, 17), (17, 12)]
    bridges = [(9, 10), (10, 11), (11, 12)]
    g = Graph.from_edges(chain + hexagon + bridges)
    assert count_facets(g) == outerplanar_bipartite((2, 2, 2, 2, 3), 3, 3)["facets"]


def test_invariants_dispatch():
    assert invariants(Wheel(5)) == {"facets": 62, "volume": 152}
    assert invariants(Cycle(2))["facets"] == 6
    assert invariants(Tree(3))["hstar"] == [1, 2, 1]
    assert invariants(Complete(4)) == {"facets": 14}
    assert invariants(EdgeJoinOddCycles(1, 2)) == {"volume": 84}
    assert invariants(OuterplanarBipartite((2,), 0, 4))["facets"] == 96
