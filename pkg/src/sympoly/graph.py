"""Simple graphs and the graph-theoretic primitives the polytope code needs.

Vertices are ``0..n-1``.  The position of an edge in ``Graph.edges`` is its
rank in the fixed total edge order; every order-dependent construction
(Groebner leading terms, triangulations) is seeded by it.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import budget
from .errors import (
    CycleBudgetExceeded,
    DisconnectedGraph,
    InvalidGraph,
    SizeBudgetExceeded,
)
from .exact import integer_det

Edge = tuple[int, int]


class OrientedEdge(NamedTuple):
    """Directed copy of graph edge ``rank``; the polytope point e_head - e_tail."""

    tail: int
    head: int
    rank: int

    def reversed(self) -> "OrientedEdge":
        return OrientedEdge(self.head, self.tail, self.rank)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise InvalidGraph("vertex count must be nonnegative")
        seen: set[frozenset[int]] = set()
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"edge {(u, v)} out of range for n={self.n}")
            if u == v:
                raise InvalidGraph(f"loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise InvalidGraph(f"parallel edge {(u, v)}")
            seen.add(key)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_rank(self) -> dict[frozenset[int], int]:
        return {frozenset(e): r for r, e in enumerate(self.edges)}

    def rank_of(self, u: int, v: int) -> int:
        return self.edge_rank[frozenset((u, v))]

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edge_rank

    def oriented(self, rank: int, sign: int = 1) -> OrientedEdge:
        u, v = self.edges[rank]
        return OrientedEdge(u, v, rank) if sign > 0 else OrientedEdge(v, u, rank)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(_bfs(self, 0)) == self.n

    def relabel_edges(self, order: Sequence[int]) -> "Graph":
        """Same graph with edge ``order[i]`` moved to rank ``i``."""
        return Graph(self.n, tuple(self.edges[i] for i in order))

    def relabel_vertices(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


def parse_graph_text(text: str) -> tuple[int | None, list[Edge]]:
    """Parse JSON ``{"n":..,"edges":..}`` or a whitespace edge list.

    Returns ``(n, edges)`` without validating simplicity so that the flow
    code can reuse it for multigraphs.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return int(data["n"]), [tuple(map(int, e)) for e in data["edges"]]
    edges = []
    for line in stripped.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidGraph(f"expected 'u v' per line, got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return None, edges


def load_graph(path: str | Path) -> Graph:
    n, edges = parse_graph_text(Path(path).read_text())
    return Graph.from_edges(edges, n)


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraph("cycles need at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(n: int) -> Graph:
    return Graph(n, tuple((0, i) for i in range(1, n)))


def wheel_graph(n: int) -> Graph:
    """K_1 * C_n with the cone at vertex 0 and the rim ``1..n`` in order."""
    if n < 3:
        raise InvalidGraph("wheels need a rim of length at least 3")
    rim = tuple((i, i % n + 1) for i in range(1, n + 1))
    spokes = tuple((0, i) for i in range(1, n + 1))
    return Graph(n + 1, rim + spokes)


def vertex_join(g1: Graph, g2: Graph, v1: int = 0, v2: int = 0) -> Graph:
    """Identify vertex ``v1`` of ``g1`` with vertex ``v2`` of ``g2``."""
    return _glue(g1, g2, {v2: v1})


def edge_join(g1: Graph, g2: Graph, e1: int = 0, e2: int = 0) -> Graph:
    """Identify edge rank ``e1`` of ``g1`` with edge rank ``e2`` of ``g2``.

    The endpoints are matched in stored order: ``g2.edges[e2][0]`` goes to
    ``g1.edges[e1][0]``.  Edges of ``g1`` keep their ranks; the remaining
    edges of ``g2`` follow.
    """
    a1, b1 = g1.edges[e1]
    a2, b2 = g2.edges[e2]
    return _glue(g1, g2, {a2: a1, b2: b1})


def _glue(g1: Graph, g2: Graph, ident: dict[int, int]) -> Graph:
    mapping: dict[int, int] = {}
    nxt = g1.n
    for v in range(g2.n):
        if v in ident:
            mapping[v] = ident[v]
        else:
            mapping[v] = nxt
            nxt += 1
    edges = list(g1.edges)
    seen = {frozenset(e) for e in edges}
    for u, v in g2.edges:
        e = (mapping[u], mapping[v])
        if frozenset(e) not in seen:
            seen.add(frozenset(e))
            edges.append(e)
    return Graph(nxt, tuple(edges))


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------

def _bfs(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distances(g: Graph, v: int) -> dict[int, int]:
    """Unit-weight shortest-path distances from ``v``."""
    dist = _bfs(g, v)
    if len(dist) != g.n:
        missing = sorted(set(range(g.n)) - dist.keys())
        raise DisconnectedGraph(f"vertices {missing} unreachable from {v}")
    return dict(sorted(dist.items()))


def bfs_order(g: Graph, root: int = 0) -> tuple[list[int], dict[int, int]]:
    """Vertices in BFS order from ``root`` and the BFS-tree parent map."""
    order, parent = [root], {root: -1}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    if len(order) != g.n:
        raise DisconnectedGraph("graph is not connected")
    return order, parent


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring with the smallest vertex of each component in class A."""
    colour: dict[int, int] = {}
    for start in range(g.n):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    a = frozenset(v for v, c in colour.items() if c == 0)
    return a, frozenset(range(g.n)) - a


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def components(n: int, edges: Iterable[Edge]) -> int:
    dsu = _DSU(n)
    count = n
    for u, v in edges:
        if dsu.union(u, v):
            count -= 1
    return count


def spanning_tree_masks(n: int, edges: Sequence[Edge],
                        forbidden: Sequence[int] = ()) -> Iterator[int]:
    """Spanning trees of ``(range(n), edges)`` as bitmasks over edge indices.

    Each tree is produced once.  A tree containing every edge of some mask
    in ``forbidden`` is skipped; the check is applied while branching so
    forbidden configurations are pruned early.
    """
    m = len(edges)
    if n <= 1:
        yield 0
        return
    by_edge: list[list[int]] = [[] for _ in range(m)]
    for mask in forbidden:
        top = mask.bit_length() - 1
        if top >= 0:
            by_edge[top].append(mask)

    def connectable(parent: list[int], start: int) -> bool:
        dsu = _DSU(n)
        dsu.parent = list(parent)
        comps = sum(1 for v in range(n) if dsu.find(v) == v)
        for i in range(start, m):
            if dsu.union(*edges[i]):
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i: int, chosen: int, size: int, parent: list[int]) -> Iterator[int]:
        if size == n - 1:
            yield chosen
            return
        if i == m:
            return
        u, v = edges[i]
        dsu = _DSU(n)
        dsu.parent = list(parent)
        ru, rv = dsu.find(u), dsu.find(v)
        if ru != rv:
            with_edge = chosen | (1 << i)
            if not any(mask & with_edge == mask for mask in by_edge[i]):
                dsu.parent[rv] = ru
                yield from rec(i + 1, with_edge, size + 1, dsu.parent)
        if connectable(parent, i + 1):
            yield from rec(i + 1, chosen, size, parent)

    if components(n, edges) != 1:
        return
    yield from rec(0, 0, 0, list(range(n)))


def spanning_trees(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every spanning tree of ``g`` once, as a sorted tuple of edge ranks."""
    if not g.is_connected():
        raise DisconnectedGraph("spanning trees need a connected graph")
    for mask in spanning_tree_masks(g.n, g.edges):
        yield tuple(i for i in range(g.m) if mask >> i & 1)


def laplacian(g: Graph) -> list[list[int]]:
    L = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return L


def matrix_tree_count(g: Graph) -> int:
    """Number of spanning trees via a reduced Laplacian determinant."""
    if g.n <= 1:
        return 1
    L = laplacian(g)
    return integer_det([row[1:] for row in L[1:]])


def simple_cycles(g: Graph, cap: int | None = None) -> list[tuple[int, ...]]:
    """All simple cycles of length >= 3, each once up to rotation/reflection.

    A cycle is reported starting at its smallest vertex ``s`` and travelling
    towards the smaller of ``s``'s two cycle neighbours.
    """
    cap = budget.limit("cycles") if cap is None else cap
    adj = g.adjacency
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True

        def dfs(u: int) -> None:
            for w in adj[u]:
                if w < s:
                    continue
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                        if len(out) > cap:
                            raise CycleBudgetExceeded(f"more than {cap} cycles")
                    continue
                if not on_path[w]:
                    on_path[w] = True
                    path.append(w)
                    dfs(w)
                    path.pop()
                    on_path[w] = False

        dfs(s)
    return out


def cycle_edge_ranks(g: Graph, cycle: Sequence[int]) -> list[int]:
    k = len(cycle)
    return [g.rank_of(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def contract(g: Graph, s: Iterable[int]) -> Graph:
    """Contract the edges with ranks in ``s`` and simplify.

    Classes of merged vertices are represented by their smallest original
    vertex and then numbered compactly in increasing order.  Loops vanish
    and parallel edges keep the first occurrence in edge order.
    """
    dsu = _DSU(g.n)
    for r in s:
        u, v = g.edges[r]
        ru, rv = dsu.find(u), dsu.find(v)
        if ru != rv:
            if ru < rv:
                dsu.parent[rv] = ru
            else:
                dsu.parent[ru] = rv
    reps = sorted({dsu.find(v) for v in range(g.n)})
    index = {r: i for i, r in enumerate(reps)}
    label = [index[dsu.find(v)] for v in range(g.n)]
    edges: list[Edge] = []
    seen: set[frozenset[int]] = set()
    for u, v in g.edges:
        a, b = label[u], label[v]
        if a == b:
            continue
        key = frozenset((a, b))
        if key not in seen:
            seen.add(key)
            edges.append((a, b))
    return Graph(len(reps), tuple(edges))


# ---------------------------------------------------------------------------
# lattice of flats
# ---------------------------------------------------------------------------

def closure(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Graphic-matroid closure: all edges spanned by the components of ``s``."""
    dsu = _DSU(g.n)
    for r in s:
        dsu.union(*g.edges[r])
    return frozenset(r for r, (u, v) in enumerate(g.edges) if dsu.find(u) == dsu.find(v))


@dataclass(frozen=True)
class FlatLattice:
    """Flats of the graphic matroid, sorted by (size, ranks), with Moebius data.

    ``mobius_bottom[F]`` is mu(bottom, F) and ``mobius_top[F]`` is mu(F, top).
    """

    flats: tuple[frozenset[int], ...]
    mobius_bottom: dict[frozenset[int], int] = field(repr=False)
    mobius_top: dict[frozenset[int], int] = field(repr=False)

    @property
    def bottom(self) -> frozenset[int]:
        return self.flats[0]

    @property
    def top(self) -> frozenset[int]:
        return self.flats[-1]

    def interval(self, lo: frozenset[int], hi: frozenset[int]) -> list[frozenset[int]]:
        return [h for h in self.flats if lo <= h <= hi]

    def mobius(self, lo: frozenset[int], hi: frozenset[int]) -> int:
        """mu(lo, hi) by the defining recursion."""
        if not lo <= hi:
            return 0
        chain = self.interval(lo, hi)
        mu: dict[frozenset[int], int] = {}
        for h in chain:
            if h == lo:
                mu[h] = 1
            else:
                mu[h] = -sum(mu[x] for x in chain if x < h and x in mu)
        return mu[hi]


def flats(g: Graph, cap: int | None = None) -> FlatLattice:
    """Lattice of flats of the cycle matroid of ``g``.

    Flats are generated from the bottom flat by repeatedly adding one edge
    and taking the closure, which reaches every flat.
    """
    cap = budget.limit("flat_edges") if cap is None else cap
    if g.m > cap:
        raise SizeBudgetExceeded(f"{g.m} edges exceeds flat budget {cap}")
    bottom = closure(g, ())
    found = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for f in frontier:
            for r in range(g.m):
                if r not in f:
                    h = closure(g, f | {r})
                    if h not in found:
                        found.add(h)
                        nxt.append(h)
        frontier = nxt
    ordered = tuple(sorted(found, key=lambda f: (len(f), sorted(f))))
    mu_bottom: dict[frozenset[int], int] = {}
    for h in ordered:
        mu_bottom[h] = 1 if h == bottom else -sum(
            mu_bottom[x] for x in ordered if len(x) < len(h) and x < h)
    top = ordered[-1]
    mu_top: dict[frozenset[int], int] = {}
    for h in reversed(ordered):
        mu_top[h] = 1 if h == top else -sum(
            mu_top[x] for x in ordered if len(x) > len(h) and h < x)
    return FlatLattice(ordered, mu_bottom, mu_top)
