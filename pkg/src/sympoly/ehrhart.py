"""Lattice points of dilates of P_G, Ehrhart and h*/gamma data, polar duals.

All counts are taken in the lattice ``Z^V`` intersected with the zero-sum
hyperplane, where P_G is full dimensional of dimension ``n - 1``.  The
Hilbert-Ehrhart series is ``h*(t) / (1 - t)^(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

import numpy as np

from . import budget
from .errors import DisconnectedGraph, NonPalindromicHStar, SizeBudgetExceeded
from .exact import Poly, interpolate
from .facets import Labeling, enumerate_facets
from .graph import Graph, bfs_order, distances

_CHUNK = 1 << 20


def _candidates(n: int, j: int) -> np.ndarray:
    """Zero-sum integer vectors with positive and negative mass at most ``j``.

    Every point of ``j * P_G`` has this property since each vertex of P_G
    has one +1 and one -1 coordinate.
    """
    vals = np.arange(-j, j + 1, dtype=np.int32)
    rows = np.zeros((1, 0), dtype=np.int32)
    pos = np.zeros(1, dtype=np.int32)
    neg = np.zeros(1, dtype=np.int32)
    for _ in range(n - 1):
        r = rows.shape[0]
        rows = np.hstack([np.repeat(rows, len(vals), axis=0),
                          np.tile(vals, r)[:, None]])
        new = rows[:, -1]
        pos = np.repeat(pos, len(vals)) + np.maximum(new, 0)
        neg = np.repeat(neg, len(vals)) + np.maximum(-new, 0)
        keep = (pos <= j) & (neg <= j)
        rows, pos, neg = rows[keep], pos[keep], neg[keep]
    last = -rows.sum(axis=1) if rows.shape[1] else np.zeros(rows.shape[0], dtype=np.int32)
    keep = (pos + np.maximum(last, 0) <= j) & (neg + np.maximum(-last, 0) <= j)
    return np.hstack([rows[keep], last[keep][:, None]])


def lattice_points(g: Graph, j: int, facet_list: Sequence[Labeling] | None = None) -> int:
    """``|j P_G ∩ Z^V|``: zero-sum ``x`` with ``f . x <= j`` for every facet ``f``."""
    if j < 0:
        raise ValueError("dilation factor must be nonnegative")
    if g.n > budget.limit("lattice_n"):
        raise SizeBudgetExceeded(f"{g.n} vertices exceeds lattice-point budget")
    if j == 0 or g.n == 1:
        return 1
    facet_list = enumerate_facets(g) if facet_list is None else facet_list
    F = np.asarray(facet_list, dtype=np.int32).T
    cand = _candidates(g.n, j)
    count = 0
    for start in range(0, cand.shape[0], _CHUNK):
        block = cand[start:start + _CHUNK]
        count += int(np.count_nonzero((block @ F).max(axis=1) <= j))
    return count


def hstar_from_values(values: Sequence[int], dim: int) -> Poly:
    """h* from ``E(0..dim)`` via ``h*(t) = (1-t)^(dim+1) sum_j E(j) t^j`` truncated."""
    return Poly(sum((-1) ** m * comb(dim + 1, m) * values[i - m] for m in range(i + 1))
                for i in range(dim + 1))


def ehrhart_from_hstar(hstar: Poly, dim: int, j: int) -> int:
    """``E(j) = sum_i h*_i C(j + dim - i, dim)``."""
    return int(sum(hstar[i] * comb(j + dim - i, dim) for i in range(dim + 1) if j + dim - i >= 0))


def gamma_vector(h: Poly, degree: int) -> tuple[int, ...]:
    """Coefficients of ``h`` in the basis ``t^i (1+t)^(degree-2i)``."""
    if not h.is_palindromic(degree):
        raise NonPalindromicHStar(f"{h} is not palindromic of degree {degree}")
    rest = h
    out = []
    for i in range(degree // 2 + 1):
        g = rest[i]
        out.append(g)
        rest = rest - Poly.monomial(i, g) * Poly([1, 1]) ** (degree - 2 * i)
    if rest:
        raise NonPalindromicHStar(f"gamma expansion of {h} left remainder {rest}")
    return tuple(int(x) for x in out)


def hstar_from_gamma(gamma: Sequence[int], degree: int) -> Poly:
    total = Poly()
    for i, g in enumerate(gamma):
        total = total + Poly.monomial(i, g) * Poly([1, 1]) ** (degree - 2 * i)
    return total


@dataclass(frozen=True)
class HStarData:
    ehrhart: Poly
    hstar: Poly
    gamma: tuple[int, ...]
    dim: int
    values: tuple[int, ...]

    @property
    def volume(self) -> int:
        return int(self.hstar(1))

    @property
    def leading_volume(self) -> int:
        """``dim! * leading coefficient`` of the Ehrhart polynomial."""
        v = self.ehrhart[self.dim] * factorial(self.dim)
        assert v.denominator == 1
        return int(v)

    def gamma_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.gamma)

    def to_json(self) -> dict:
        return {"ehrhart": self.ehrhart.to_json(), "hstar": self.hstar.to_json(),
                "gamma": list(self.gamma), "volume": self.volume}


def h_star(g: Graph) -> HStarData:
    """Ehrhart polynomial, h*-polynomial and gamma-vector of P_G."""
    if not g.is_connected():
        raise DisconnectedGraph("h* needs a connected graph")
    dim = g.n - 1
    facet_list = enumerate_facets(g) if g.n > 1 else []
    values = tuple(lattice_points(g, j, facet_list) for j in range(dim + 1))
    ehr = interpolate(list(enumerate(values)))
    hs = hstar_from_values(values, dim)
    if any(c < 0 for c in hs.coeffs) or hs[0] != 1 or hs.degree != dim:
        raise NonPalindromicHStar(f"unexpected h* {hs}")
    gam = gamma_vector(hs, dim)
    return HStarData(ehr, hs, gam, dim, values)


# ---------------------------------------------------------------------------
# polar dual
# ---------------------------------------------------------------------------

def polar_dual_points(g: Graph) -> int:
    """Lattice points of the polar dual of P_G.

    These are the labelings ``f`` with ``f(0) = 0`` and ``|f(u) - f(v)| <= 1``
    on every edge.
    """
    if g.n == 1:
        return 1
    order, _ = bfs_order(g, 0)
    dist = distances(g, 0)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in g.adjacency[v] if pos[w] < pos[v]] for v in range(g.n)]
    f = [0] * g.n

    def rec(i: int) -> int:
        if i == len(order):
            return 1
        v = order[i]
        nbrs = earlier[v]
        lo = max(f[w] for w in nbrs) - 1
        hi = min(f[w] for w in nbrs) + 1
        lo, hi = max(lo, -dist[v]), min(hi, dist[v])
        total = 0
        for x in range(lo, hi + 1):
            f[v] = x
            total += rec(i + 1)
        return total

    return rec(1)
