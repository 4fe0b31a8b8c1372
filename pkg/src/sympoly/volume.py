"""Normalized volume of P_G through an explicit regular unimodular triangulation.

The triangulation is the one induced by the degrevlex order
``z < x_{e_1} < y_{e_1} < ... < x_{e_m} < y_{e_m}`` (edge ranks give the
order).  Its Groebner basis has a closed form whose leading monomials are
products of oriented cycle edges; a simplex of a facet is a spanning tree
of G_F, and it survives iff its oriented edges contain no leading monomial.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DisconnectedGraph
from .facets import Labeling, enumerate_facets, facet_subgraph
from .graph import Graph, OrientedEdge, cycle_edge_ranks, simple_cycles, spanning_tree_masks


@dataclass(frozen=True)
class ForbiddenSet:
    """Support of one leading monomial: oriented edges of a cycle."""

    arcs: frozenset[OrientedEdge]
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class FacetTriangulation:
    facet: Labeling
    simplices: tuple[tuple[OrientedEdge, ...], ...]

    @property
    def volume(self) -> int:
        return len(self.simplices)


def forbidden_sets(g: Graph, cycles: Sequence[tuple[int, ...]] | None = None) -> list[ForbiddenSet]:
    """Leading-monomial supports from every simple cycle, both orientations.

    Even cycles of length 2k contribute the k-subsets avoiding the cycle's
    smallest edge; odd cycles of length 2k+1 contribute all (k+1)-subsets.
    The binomials ``x_e y_e - z^2`` are left out: no facet holds both
    orientations of an edge.
    """
    cycles = simple_cycles(g) if cycles is None else cycles
    out: list[ForbiddenSet] = []
    for cyc in cycles:
        length = len(cyc)
        ranks = cycle_edge_ranks(g, cyc)
        forward = [OrientedEdge(cyc[i], cyc[(i + 1) % length], ranks[i]) for i in range(length)]
        if length % 2 == 0:
            smallest = ranks.index(min(ranks))
            pool = [i for i in range(length) if i != smallest]
            size = length // 2
        else:
            pool = list(range(length))
            size = length // 2 + 1
        for orient in (forward, [a.reversed() for a in forward]):
            for J in combinations(pool, size):
                out.append(ForbiddenSet(frozenset(orient[i] for i in J), cyc))
    return out


def _facet_masks(arcs: Sequence[OrientedEdge], forb: Sequence[ForbiddenSet]) -> list[int]:
    position = {a: i for i, a in enumerate(arcs)}
    masks = set()
    for fs in forb:
        mask = 0
        for a in fs.arcs:
            i = position.get(a)
            if i is None:
                break
            mask |= 1 << i
        else:
            masks.add(mask)
    # keep only inclusion-minimal masks
    minimal = []
    for mask in sorted(masks, key=lambda x: (bin(x).count("1"), x)):
        if not any(m & mask == m for m in minimal):
            minimal.append(mask)
    return minimal


def facet_volume(g: Graph, f: Sequence[int],
                 forb: Sequence[ForbiddenSet]) -> tuple[int, FacetTriangulation]:
    """Simplices of the triangulation lying in the facet ``f``."""
    sub = facet_subgraph(g, f)
    arcs = sub.arcs
    ranks = {a.rank for a in arcs}
    # a facet never holds both orientations of an edge, so x_e y_e is irrelevant
    assert len(ranks) == len(arcs)
    masks = _facet_masks(arcs, forb)
    edges = sub.undirected_edges()
    simplices = []
    for tree in spanning_tree_masks(g.n, edges, masks):
        simplices.append(tuple(arcs[i] for i in range(len(arcs)) if tree >> i & 1))
    assert all(len(s) == g.n - 1 and {a.rank for a in s} <= ranks for s in simplices)
    simplices.sort(key=lambda s: [a.rank for a in s])
    return len(simplices), FacetTriangulation(tuple(f), tuple(simplices))


def _facet_job(args):
    g, f, forb = args
    return facet_volume(g, f, forb)[1]


def triangulation(g: Graph, workers: int | None = None) -> list[FacetTriangulation]:
    """Triangulation of the boundary of P_G, one entry per facet (sorted).

    With ``workers > 1`` the per-facet work runs in a process pool; the
    result is identical to the serial one.
    """
    if not g.is_connected():
        raise DisconnectedGraph("volume needs a connected graph")
    facet_list = enumerate_facets(g)
    forb = forbidden_sets(g)
    jobs = [(g, f, forb) for f in facet_list]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_facet_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        parts = [_facet_job(j) for j in jobs]
    return sorted(parts, key=lambda t: t.facet)


def normalized_volume(g: Graph, workers: int | None = None) -> int:
    """Normalized volume of P_G (w.r.t. the zero-sum lattice)."""
    if g.n == 1:
        return 1
    return sum(t.volume for t in triangulation(g, workers))


def simplex_to_signed(g: Graph, simplex: Sequence[OrientedEdge]) -> list[int]:
    """Encode oriented edges as ``+(rank+1)`` for the stored orientation of
    the edge and ``-(rank+1)`` for the reverse one."""
    out = []
    for a in simplex:
        sign = 1 if g.edges[a.rank] == (a.tail, a.head) else -1
        out.append(sign * (a.rank + 1))
    return out


def triangulation_to_json(g: Graph, tri: Sequence[FacetTriangulation]) -> list[dict]:
    return [{"facet": list(t.facet),
             "simplices": [simplex_to_signed(g, s) for s in t.simplices]}
            for t in tri]
