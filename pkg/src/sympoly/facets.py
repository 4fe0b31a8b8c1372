"""Facets of the symmetric edge polytope P_G.

A facet is encoded by an integer labeling ``f`` of the vertices (a tuple,
index = vertex) with ``f[0] == 0``, ``|f(u) - f(v)| <= 1`` on every edge and
such that the edges with ``|f(u) - f(v)| == 1`` form a connected spanning
subgraph.  The facet consists of the points ``e_v - e_u`` with
``f(v) - f(u) == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import budget
from .errors import DisconnectedGraph, NotAFacet, SizeBudgetExceeded
from .exact import rank
from .graph import Graph, OrientedEdge, bfs_order, components, distances, is_bipartite

Labeling = tuple[int, ...]


def is_facet_labeling(g: Graph, f: Sequence[int]) -> bool:
    """Direct check of both facet conditions (no gauge condition)."""
    if len(f) != g.n:
        return False
    tight = []
    for u, v in g.edges:
        d = abs(f[u] - f[v])
        if d > 1:
            return False
        if d == 1:
            tight.append((u, v))
    return components(g.n, tight) == 1


def _labelings(g: Graph, bipartite_shortcut: bool = True) -> Iterator[Labeling]:
    if g.n < 1:
        return
    order, parent = bfs_order(g, 0)
    dist = distances(g, 0)
    adj = g.adjacency
    steps = (-1, 1) if bipartite_shortcut and is_bipartite(g) is not None else (-1, 0, 1)
    pos = {v: i for i, v in enumerate(order)}
    # neighbours assigned before v in BFS order
    earlier = [[w for w in adj[v] if pos[w] < pos[v]] for v in range(g.n)]
    f = [0] * g.n

    def rec(i: int) -> Iterator[Labeling]:
        if i == len(order):
            if is_facet_labeling(g, f):
                yield tuple(f)
            return
        v = order[i]
        base = f[parent[v]]
        for step in steps:
            x = base + step
            if abs(x) > dist[v]:
                continue
            ok = True
            for w in earlier[v]:
                d = abs(x - f[w])
                if d > 1 or (d == 0 and len(steps) == 2):
                    ok = False
                    break
            if ok:
                f[v] = x
                yield from rec(i + 1)
        f[v] = 0

    yield from rec(1)


def enumerate_facets(g: Graph) -> list[Labeling]:
    """All facet labelings of ``P_G`` rooted at ``f(0) = 0``, sorted."""
    if g.n < 2:
        raise DisconnectedGraph("facets need a connected graph with at least 2 vertices")
    if not g.is_connected():
        raise DisconnectedGraph("facet enumeration needs a connected graph")
    return sorted(_labelings(g))


def count_facets(g: Graph) -> int:
    """Number of facets; one-vertex graphs count as having a single facet."""
    if g.n == 1:
        return 1
    if not g.is_connected():
        raise DisconnectedGraph("facet counting needs a connected graph")
    return sum(1 for _ in _labelings(g))


# ---------------------------------------------------------------------------
# facet subgraphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrientedSubgraph:
    """G_F: the edges of ``graph`` oriented upwards along the labeling."""

    graph: Graph
    labeling: Labeling
    arcs: tuple[OrientedEdge, ...]

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(a.rank for a in self.arcs)

    def undirected_edges(self) -> list[tuple[int, int]]:
        return [(a.tail, a.head) for a in self.arcs]


def facet_subgraph(g: Graph, f: Sequence[int]) -> OrientedSubgraph:
    if not is_facet_labeling(g, f):
        raise NotAFacet(f"{list(f)} is not facet-defining for this graph")
    arcs = []
    for r, (u, v) in enumerate(g.edges):
        if f[v] - f[u] == 1:
            arcs.append(OrientedEdge(u, v, r))
        elif f[u] - f[v] == 1:
            arcs.append(OrientedEdge(v, u, r))
    # labels strictly increase along arcs, so G_F has no directed cycle
    assert all(f[a.head] == f[a.tail] + 1 for a in arcs)
    return OrientedSubgraph(g, tuple(f), tuple(arcs))


# ---------------------------------------------------------------------------
# vertex-facet incidences and the face lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IncidenceStructure:
    graph: Graph
    vertices: tuple[OrientedEdge, ...]
    facets: tuple[Labeling, ...]
    members: tuple[frozenset[int], ...]  # vertex indices on each facet

    @property
    def dim(self) -> int:
        return self.graph.n - 1

    def point(self, i: int) -> tuple[int, ...]:
        a = self.vertices[i]
        x = [0] * self.graph.n
        x[a.head] += 1
        x[a.tail] -= 1
        return tuple(x)


def incidence(g: Graph, facet_list: Sequence[Labeling] | None = None) -> IncidenceStructure:
    """Vertex-facet incidence of ``P_G``; vertex ``2r`` / ``2r+1`` are the two
    orientations of edge ``r`` (stored orientation first)."""
    facet_list = enumerate_facets(g) if facet_list is None else list(facet_list)
    verts: list[OrientedEdge] = []
    for r in range(g.m):
        verts.append(g.oriented(r, 1))
        verts.append(g.oriented(r, -1))
    members = tuple(
        frozenset(i for i, a in enumerate(verts) if f[a.head] - f[a.tail] == 1)
        for f in facet_list
    )
    return IncidenceStructure(g, tuple(verts), tuple(facet_list), members)


def face_dimension(inc: IncidenceStructure, face: frozenset[int]) -> int:
    """Affine dimension in the zero-sum chart (coordinates x_0..x_{n-2})."""
    pts = sorted(face)
    if not pts:
        return -1
    base = inc.point(pts[0])[:-1]
    diffs = [[a - b for a, b in zip(inc.point(p)[:-1], base)] for p in pts[1:]]
    return rank(diffs) if diffs else 0


def face_lattice(inc: IncidenceStructure) -> tuple[list[int], list[tuple[int, frozenset[int]]]]:
    """f-vector ``(f_0, .., f_{d-1})`` and the proper nonempty faces.

    Faces are the nonempty intersections of facet vertex sets; each is
    returned as ``(dimension, vertex-index set)``.
    """
    d = inc.dim
    if d > budget.limit("face_dim"):
        raise SizeBudgetExceeded(f"dimension {d} exceeds face-lattice budget")
    found = set(inc.members)
    frontier = list(found)
    while frontier:
        nxt = []
        for face in frontier:
            for facet in inc.members:
                meet = face & facet
                if meet and meet not in found:
                    found.add(meet)
                    nxt.append(meet)
        frontier = nxt
    faces = sorted(((face_dimension(inc, f), f) for f in found),
                   key=lambda t: (t[0], sorted(t[1])))
    fvec = [0] * d
    for dim, _ in faces:
        fvec[dim] += 1
    return fvec, faces
