"""Closed formulas for facet counts, volumes and h* of special graph families.

Everything here is pure integer/polynomial arithmetic; the test-suite checks
each formula against the general machinery in ``facets``, ``volume`` and
``ehrhart``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from .errors import NonDivisible, NonIntegralResult, NotAFacetWord
from .exact import Poly, RationalFunction, series_coefficients


@dataclass(frozen=True)
class Cycle:
    k: int


@dataclass(frozen=True)
class Tree:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Wheel:
    n: int


@dataclass(frozen=True)
class EdgeJoinOddCycles:
    i: int
    j: int


@dataclass(frozen=True)
class OuterplanarBipartite:
    a: tuple[int, ...]
    s: int
    t: int


FamilySpec = Cycle | Tree | Complete | Wheel | EdgeJoinOddCycles | OuterplanarBipartite


# ---------------------------------------------------------------------------
# even cycles, trees, complete graphs
# ---------------------------------------------------------------------------

def cycle_fvector(k: int) -> list[int]:
    """f-vector of P_{C_2k}: faces are pairs (A, B) of disjoint edge sets with
    |A|, |B| < k, plus the facets with |A| = |B| = k."""
    out = []
    for i in range(2 * k - 2):
        out.append(sum(comb(2 * k, a) * comb(2 * k - a, i + 1 - a)
                       for a in range(k) if 0 <= i + 1 - a < k))
    out.append(comb(2 * k, k))
    return out


def cycle_invariants(k: int) -> dict:
    if k < 2:
        raise ValueError("even cycles need k >= 2")
    return {"facets": comb(2 * k, k), "volume": k * comb(2 * k, k),
            "fvector": cycle_fvector(k)}


def tree_invariants(n: int) -> dict:
    if n < 2:
        raise ValueError("trees need n >= 2")
    return {"facets": 2 ** (n - 1), "volume": 2 ** (n - 1),
            "hstar": Poly([1, 1]) ** (n - 1)}


def complete_graph_facets(n: int) -> int:
    return 2 ** n - 2


# ---------------------------------------------------------------------------
# joins
# ---------------------------------------------------------------------------

def edge_join_facets(f1: int, f2: int) -> int:
    """Facets after gluing two bipartite graphs along an edge."""
    if (f1 * f2) % 2:
        raise NonDivisible("facet counts of bipartite graphs are even")
    return f1 * f2 // 2


def vertex_join_hstar(h1: Poly, h2: Poly) -> Poly:
    return h1 * h2


def edge_join_hstar(h1: Poly, h2: Poly) -> Poly:
    """``H1 H2 / (1 + t)``; the second graph must be bipartite."""
    q, r = divmod(h1 * h2, Poly([1, 1]))
    if r:
        raise NonDivisible(f"(1+t) does not divide {h1 * h2}")
    return q


def convolve(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def odd_cycles_edge_join_volume(i: int, j: int) -> int:
    """Volume for C_{2i+1} and C_{2j+1} glued along an edge."""
    return (i + j + 2 * i * j) * comb(2 * i, i) * comb(2 * j, j)


# ---------------------------------------------------------------------------
# wheels
# ---------------------------------------------------------------------------

WHEEL_FACET_GF = RationalFunction(Poly([1, 1, 0, -3, -7, 2, 2]),
                                  Poly([1, -1]) * Poly([1, -1, -2, -2]))


def wheel_facets_series(n_max: int) -> list[int]:
    """Coefficients of the wheel facet generating function up to ``z^n_max``."""
    return [int(c) for c in series_coefficients(WHEEL_FACET_GF, n_max)]


def wheel_facets(n: int) -> int:
    """Facets of P_{K_1 * C_n} from a_n = 2a_{n-1} + a_{n-2} - 2a_{n-4}."""
    if n < 3:
        raise ValueError("wheels need n >= 3")
    a = wheel_facets_series(6)
    while len(a) <= n:
        m = len(a)
        a.append(2 * a[m - 1] + a[m - 2] - 2 * a[m - 4])
    return a[n]


def wheel_volume(n: int) -> int:
    """(1-sqrt3)^n + (1+sqrt3)^n, minus 2 for even n, via p_m = 2p_{m-1} + 2p_{m-2}."""
    if n < 3:
        raise ValueError("wheels need n >= 3")
    p0, p1 = 2, 2
    for _ in range(n - 1):
        p0, p1 = p1, 2 * p1 + 2 * p0
    return p1 - (2 if n % 2 == 0 else 0)


WHEEL_SYMBOLS = {"+": 1, "0": 0, "-": -1}


def _word_values(word: str | Sequence[int]) -> list[int]:
    if isinstance(word, str):
        try:
            return [WHEEL_SYMBOLS[c] for c in word]
        except KeyError as exc:
            raise NotAFacetWord(f"symbol {exc.args[0]!r} not in '+0-'") from None
    return [int(x) for x in word]


def is_wheel_facet_word(word: str | Sequence[int]) -> bool:
    """Cyclically avoids +-, -+ and 000."""
    w = _word_values(word)
    n = len(w)
    if n < 3 or any(x not in (-1, 0, 1) for x in w):
        return False
    for i in range(n):
        if abs(w[i] - w[(i + 1) % n]) > 1:
            return False
        if w[i] == w[(i + 1) % n] == w[(i + 2) % n] == 0:
            return False
    return True


def wheel_word_c(word: str | Sequence[int]) -> int:
    """Number of cyclic factors of the form (+-)0(+-)."""
    w = _word_values(word)
    n = len(w)
    return sum(1 for i in range(n)
               if w[i] == 0 and w[i - 1] != 0 and w[(i + 1) % n] != 0)


def is_exceptional_word(word: str | Sequence[int]) -> bool:
    """The four alternating words (+0)^k, (0+)^k, (-0)^k, (0-)^k of even length."""
    w = _word_values(word)
    n = len(w)
    if n % 2:
        return False
    for shift in (0, 1):
        for sign in (1, -1):
            if all(w[i] == (sign if (i + shift) % 2 == 0 else 0) for i in range(n)):
                return True
    return False


def per_facet_wheel_volume(word: str | Sequence[int]) -> int:
    if not is_wheel_facet_word(word):
        raise NotAFacetWord(f"{word!r} is not a wheel facet word")
    c = wheel_word_c(word)
    return 2 ** c - 1 if is_exceptional_word(word) else 2 ** c


def wheel_word_labeling(word: str | Sequence[int]) -> tuple[int, ...]:
    """Facet labeling of :func:`sympoly.graph.wheel_graph` (cone = vertex 0)."""
    return (0, *_word_values(word))


# ---------------------------------------------------------------------------
# outerplanar bipartite graphs
# ---------------------------------------------------------------------------

def outerplanar_bipartite(a: Sequence[int], s: int, t: int) -> dict:
    """Facets/volume from bounded-face half-lengths ``a``, ``s`` edges shared
    by two bounded faces and ``t`` bridges."""
    if any(x < 2 for x in a) or s < 0 or t < 0:
        raise ValueError("need a_i >= 2, s >= 0, t >= 0")
    scale = Fraction(2) ** (t - s)
    facets = scale * prod(comb(2 * x, x) for x in a)
    volume = scale * prod(x * comb(2 * x, x) for x in a)
    if facets.denominator != 1 or volume.denominator != 1:
        raise NonIntegralResult(f"parameters a={list(a)}, s={s}, t={t} are inconsistent")
    return {"facets": int(facets), "volume": int(volume)}


def invariants(spec: FamilySpec) -> dict:
    """Dispatch on a :data:`FamilySpec`."""
    match spec:
        case Cycle(k):
            return cycle_invariants(k)
        case Tree(n):
            out = tree_invariants(n)
            return {**out, "hstar": out["hstar"].int_coeffs()}
        case Complete(n):
            return {"facets": complete_graph_facets(n)}
        case Wheel(n):
            return {"facets": wheel_facets(n), "volume": wheel_volume(n)}
        case EdgeJoinOddCycles(i, j):
            return {"volume": odd_cycles_edge_join_volume(i, j)}
        case OuterplanarBipartite(a, s, t):
            return outerplanar_bipartite(a, s, t)
    raise TypeError(f"unknown family {spec!r}")
