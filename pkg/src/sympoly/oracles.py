"""Slow, independent reference computations used to cross-check the fast paths.

None of these share code with the production enumerators beyond the
``Graph`` container.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .graph import Graph


def _connected(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def box_facets(g: Graph) -> list[tuple[int, ...]]:
    """Facet labelings found by scanning the box ``[-(n-1), n-1]^(n-1)``.

    Uses no distance bound and no bipartite shortcut.
    """
    n = g.n
    r = n - 1
    vals = np.arange(-r, r + 1, dtype=np.int8)
    grids = np.meshgrid(*([vals] * (n - 1)), indexing="ij")
    pts = np.stack([np.zeros(grids[0].size, dtype=np.int8)] + [x.ravel() for x in grids], axis=1)
    ok = np.ones(pts.shape[0], dtype=bool)
    for u, v in g.edges:
        ok &= np.abs(pts[:, u].astype(np.int16) - pts[:, v]) <= 1
    out = []
    for row in pts[ok]:
        tight = [(u, v) for u, v in g.edges if abs(int(row[u]) - int(row[v])) == 1]
        if _connected(n, tight):
            out.append(tuple(int(x) for x in row))
    return sorted(out)


def box_lattice_points(g: Graph, j: int) -> int:
    """``|j P_G ∩ Z^V|`` from the vertex description: x is in ``jP_G`` iff it
    is a nonnegative combination of the arcs ``e_u - e_v`` with total weight
    at most ``j`` (checked by a small flow search)."""
    n = g.n
    count = 0
    for x in product(range(-j, j + 1), repeat=n - 1):
        last = -sum(x)
        if abs(last) > j:
            continue
        point = (*x, last)
        if sum(c for c in point if c > 0) > j:
            continue
        if _min_cost(g, point) <= j:
            count += 1
    return count


def _min_cost(g: Graph, demand: Sequence[int]) -> int:
    """Earth mover's cost of ``demand`` (positive entries are sinks) on the
    graph metric, by brute force over unit pairings.  Transport problems
    with integer data have integral optima, so this is the exact LP value."""
    sinks = [v for v, c in enumerate(demand) for _ in range(max(c, 0))]
    sources = [v for v, c in enumerate(demand) for _ in range(max(-c, 0))]
    if not sinks:
        return 0
    dist = _all_distances(g)
    best = None
    seen = set()
    for perm in permutations(sources):
        if perm in seen:
            continue
        seen.add(perm)
        cost = sum(dist[a][b] for a, b in zip(perm, sinks))
        best = cost if best is None else min(best, cost)
    return best


def _all_distances(g: Graph) -> list[list[int]]:
    n = g.n
    inf = 10 ** 9
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def random_graph(rng: random.Random, n_max: int = 7, connected: bool = False) -> Graph:
    """Erdos-Renyi style graph with a random density."""
    while True:
        n = rng.randint(1, n_max)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        rng.shuffle(edges)
        g = Graph(n, tuple(edges))
        if not connected or g.is_connected():
            return g


def kirchhoff_count(g: Graph) -> int:
    """Spanning trees as the reduced Laplacian determinant (Fraction pivoting)."""
    n = g.n
    if n == 1:
        return 1
    L = [[Fraction(0)] * n for _ in range(n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    M = [row[1:] for row in L[1:]]
    det = Fraction(1)
    size = n - 1
    for c in range(size):
        piv = next((r for r in range(c, size) if M[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, size):
            factor = M[r][c] / M[c][c]
            if factor:
                for k in range(c, size):
                    M[r][k] -= factor * M[c][k]
    return int(det)
