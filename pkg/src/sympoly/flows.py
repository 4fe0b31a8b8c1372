"""Nowhere-zero integer flows and the flat-lattice formulas for polar duals.

This is the only module that accepts multigraphs (planar duals of simple
graphs usually have parallel edges).  Each edge is oriented from its smaller
endpoint to its larger one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import budget
from .ehrhart import polar_dual_points
from .errors import DisconnectedGraph, LoopsUnsupported, SizeBudgetExceeded
from .facets import count_facets
from .graph import Graph, contract, flats, is_bipartite


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if u == v:
                raise LoopsUnsupported(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {(u, v)} out of range")

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "Multigraph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges))

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls(g.n, g.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def dual_of_cycle(n: int) -> Multigraph:
    """Planar dual of C_n: two faces joined by n parallel edges."""
    return Multigraph(2, tuple((0, 1) for _ in range(n)))


def is_flow(g: Multigraph, x: Sequence[int]) -> bool:
    net = [0] * g.n
    for (u, v), val in zip(g.edges, x):
        a, b = min(u, v), max(u, v)
        net[a] -= val
        net[b] += val
    return not any(net)


def nowhere_zero_flows(g: Multigraph | Graph, k: int) -> int:
    """Count integer flows with ``0 < |x_e| < k`` on every edge."""
    if isinstance(g, Graph):
        g = Multigraph.from_graph(g)
    if k < 2:
        raise ValueError("k must be at least 2")
    m = len(g.edges)
    if (2 * k - 2) ** m > budget.limit("flows"):
        raise SizeBudgetExceeded(f"(2k-2)^|E| = {(2 * k - 2) ** m} exceeds the flow budget")
    if m == 0:
        return 1
    values = [v for v in range(-(k - 1), k) if v]
    oriented = [(min(u, v), max(u, v)) for u, v in g.edges]
    # order edges so each vertex closes as early as possible
    order = sorted(range(m), key=lambda e: (oriented[e][1], oriented[e][0]))
    remaining = [0] * g.n
    for e in order:
        a, b = oriented[e]
        remaining[a] += 1
        remaining[b] += 1
    net = [0] * g.n
    cap = k - 1

    def rec(i: int) -> int:
        if i == m:
            return 1
        a, b = oriented[order[i]]
        remaining[a] -= 1
        remaining[b] -= 1
        total = 0
        for val in values:
            net[a] -= val
            net[b] += val
            if (abs(net[a]) <= cap * remaining[a] and abs(net[b]) <= cap * remaining[b]):
                total += rec(i + 1)
            net[a] += val
            net[b] -= val
        remaining[a] += 1
        remaining[b] += 1
        return total

    return rec(0)


def facets_via_dual_flows(g_dual: Multigraph) -> int:
    """Facets of P_G for bipartite planar G, given its planar dual."""
    return nowhere_zero_flows(g_dual, 2)


def dual_points_via_mobius(g: Graph) -> int:
    """Sum of facet counts of the bipartite contractions G/S over flats S."""
    if not g.is_connected():
        raise DisconnectedGraph("needs a connected graph")
    total = 0
    for s in flats(g).flats:
        h = contract(g, s)
        if is_bipartite(h) is not None:
            total += count_facets(h)
    return total


def facets_via_mobius_inversion(g: Graph) -> int:
    """Facets of P_G as ``sum_S mu(bottom, S) * #(polar dual of G/S)``.

    Valid for planar bipartite ``g``; it inverts :func:`dual_points_via_mobius`.
    """
    lattice = flats(g)
    return sum(lattice.mobius_bottom[s] * polar_dual_points(contract(g, s))
               for s in lattice.flats)
