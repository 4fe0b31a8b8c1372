"""Kantorovich-Rubinstein polytopes of graph metrics as coordinate sections.

For a connected graph ``g`` and marked vertices ``V1`` the KR polytope of the
shortest-path metric on ``V1`` is compared with the slice of P_G by the
coordinate subspace ``R^{V1}``.  Points are tuples of ``Fraction`` over all
vertices of ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import budget
from .errors import DisconnectedGraph, SingularSystem, SizeBudgetExceeded
from .exact import solve_linear
from .facets import Labeling, enumerate_facets
from .graph import Graph, distances

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class MetricRestriction:
    graph: Graph
    subset: tuple[int, ...]
    d: tuple[tuple[int, ...], ...]

    def dist(self, i: int, j: int) -> int:
        return self.d[self.subset.index(i)][self.subset.index(j)]


def metric_restriction(g: Graph, subset: Sequence[int]) -> MetricRestriction:
    v1 = tuple(sorted(set(int(v) for v in subset)))
    if len(v1) < 2:
        raise ValueError("the marked subset needs at least two vertices")
    if any(not 0 <= v < g.n for v in v1):
        raise ValueError(f"subset {list(v1)} has vertices outside 0..{g.n - 1}")
    if not g.is_connected():
        raise DisconnectedGraph("graph metric needs a connected graph")
    rows = []
    for u in v1:
        du = distances(g, u)
        rows.append(tuple(du[v] for v in v1))
    return MetricRestriction(g, v1, tuple(rows))


def _unit(n: int, i: int, j: int, scale: int) -> Point:
    x = [Fraction(0)] * n
    x[i] = Fraction(1, scale)
    x[j] = Fraction(-1, scale)
    return tuple(x)


def kr_generators(g: Graph, subset: Sequence[int]) -> list[Point]:
    """``(e_i - e_j) / d(i, j)`` for ordered pairs of distinct marked vertices."""
    m = metric_restriction(g, subset)
    return [_unit(g.n, i, j, m.dist(i, j))
            for i in m.subset for j in m.subset if i != j]


def _satisfies(x: Point, facet_list: Sequence[Labeling]) -> bool:
    return all(sum(f[v] * x[v] for v in range(len(x)) if x[v]) <= 1 for f in facet_list)


def verify_generators_in_section(g: Graph, subset: Sequence[int],
                                 facet_list: Sequence[Labeling] | None = None,
                                 points: Sequence[Point] | None = None) -> bool:
    """Every generator lies in P_G and vanishes off the marked subset."""
    marked = set(subset)
    facet_list = enumerate_facets(g) if facet_list is None else facet_list
    points = kr_generators(g, subset) if points is None else points
    for x in points:
        if any(x[v] for v in range(g.n) if v not in marked) or sum(x) != 0:
            return False
        if not _satisfies(x, facet_list):
            return False
    return True


def section_vertices(g: Graph, subset: Sequence[int],
                     facet_list: Sequence[Labeling] | None = None) -> list[Point]:
    """Vertices of ``P_G ∩ R^{V1}`` by exact hyperplane-subset enumeration.

    Works in the chart that keeps the first ``|V1| - 1`` marked coordinates;
    the last one is minus their sum.
    """
    v1 = metric_restriction(g, subset).subset
    dim = len(v1) - 1
    if dim > budget.limit("section_dim"):
        raise SizeBudgetExceeded(f"section dimension {dim} exceeds budget")
    facet_list = enumerate_facets(g) if facet_list is None else facet_list
    last = v1[-1]
    rows = sorted({tuple(f[v] - f[last] for v in v1[:-1]) for f in facet_list})
    rows = [r for r in rows if any(r)]
    found: set[Point] = set()
    for combo in combinations(rows, dim):
        try:
            y = solve_linear([list(r) for r in combo], [Fraction(1)] * dim)
        except SingularSystem:
            continue
        if all(sum(a * b for a, b in zip(r, y)) <= 1 for r in rows):
            x = [Fraction(0)] * g.n
            for v, val in zip(v1[:-1], y):
                x[v] = Fraction(val)
            x[last] = -sum(y, Fraction(0))
            found.add(tuple(x))
    return sorted(found)


def convex_coefficients(p: Point, gens: Sequence[Point],
                        coords: Sequence[int]) -> tuple[tuple[int, ...], list[Fraction]] | None:
    """Find generators and weights with ``p = sum w_i g_i``, ``w >= 0``, ``sum w = 1``.

    Searches affinely independent subsets of size ``len(coords) + 1``, where
    ``coords`` is a chart of the affine span (enough by Caratheodory when the
    generators span it).
    """
    size = len(coords) + 1
    for idx in combinations(range(len(gens)), size):
        A = [[gens[i][c] for i in idx] for c in coords] + [[Fraction(1)] * size]
        b = [p[c] for c in coords] + [Fraction(1)]
        try:
            w = solve_linear(A, b)
        except SingularSystem:
            continue
        if all(x >= 0 for x in w):
            return idx, w
    return None


def verify_section_equality(g: Graph, subset: Sequence[int]) -> bool:
    """``P_G ∩ R^{V1}`` equals the KR polytope of the graph metric on ``V1``."""
    facet_list = enumerate_facets(g)
    gens = kr_generators(g, subset)
    if not verify_generators_in_section(g, subset, facet_list, gens):
        return False
    v1 = sorted(set(subset))
    coords = v1[:-1]
    return all(convex_coefficients(p, gens, coords) is not None
               for p in section_vertices(g, subset, facet_list))


def scaled_generators_in_section(g: Graph, subset: Sequence[int], extra: int = 1) -> bool:
    """``(e_i - e_j) / d'`` with ``d' = d(i, j) + extra`` still lies in P_G."""
    m = metric_restriction(g, subset)
    pts = [_unit(g.n, i, j, m.dist(i, j) + extra)
           for i in m.subset for j in m.subset if i != j]
    return verify_generators_in_section(g, subset, points=pts)


def is_antipodal(points: Sequence[Point]) -> bool:
    s = set(points)
    return all(tuple(-x for x in p) in s for p in s)
