"""Goulden-Jackson cluster method for words avoiding forbidden factors.

Words are tuples of symbols ``0..k-1``.  ``gj_linear`` gives the rational
generating function of ordinary words, ``gj_cyclic`` the Edlin-Zeilberger
variant for rooted cyclic words.  ``brute_force_words`` is the enumeration
oracle both are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from . import budget
from .errors import InvalidBadWordSet, SizeBudgetExceeded
from .exact import Poly, RationalFunction, chop, mat_mul, mat_solve, series_coefficients, solve_linear

Word = tuple[int, ...]


def _is_factor(small: Word, big: Word) -> bool:
    m = len(small)
    return any(big[i:i + m] == small for i in range(len(big) - m + 1))


@dataclass(frozen=True)
class BadWordSet:
    k: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        words = tuple(tuple(int(c) for c in w) for w in self.words)
        object.__setattr__(self, "words", words)
        if self.k < 1:
            raise InvalidBadWordSet("alphabet must be nonempty")
        if len(set(words)) != len(words):
            raise InvalidBadWordSet("duplicate bad words")
        for w in words:
            if not w:
                raise InvalidBadWordSet("bad words must be nonempty")
            if any(not 0 <= c < self.k for c in w):
                raise InvalidBadWordSet(f"{w} uses symbols outside 0..{self.k - 1}")
        for u in words:
            for v in words:
                if u != v and _is_factor(u, v):
                    raise InvalidBadWordSet(f"{u} is a proper factor of {v}")

    @classmethod
    def from_strings(cls, words: Sequence[str], k: int | None = None,
                     alphabet: str | None = None) -> "BadWordSet":
        """Map characters to symbols; first-appearance order unless an
        explicit ``alphabet`` string fixes it."""
        symbols: dict[str, int] = {}
        if alphabet is not None:
            symbols = {c: i for i, c in enumerate(alphabet)}
        for w in words:
            for c in w:
                if c not in symbols:
                    if alphabet is not None:
                        raise InvalidBadWordSet(f"symbol {c!r} not in alphabet")
                    symbols[c] = len(symbols)
        k = len(symbols) if k is None else k
        if len(symbols) > k:
            raise InvalidBadWordSet(f"{len(symbols)} symbols used but alphabet size is {k}")
        return cls(k, tuple(tuple(symbols[c] for c in w) for w in words))


def overlaps(u: Word, v: Word) -> list[Word]:
    """Words that are both a proper suffix of ``u`` and a proper prefix of ``v``."""
    return [v[:m] for m in range(1, min(len(u), len(v)))
            if u[len(u) - m:] == v[:m]]


def overlap_weight(u: Word, v: Word) -> RationalFunction:
    """``(u : v)``: sum over overlaps x of s^(|v| - |x|)."""
    return RationalFunction(sum((Poly.monomial(len(v) - len(x)) for x in overlaps(u, v)), Poly()))


def cluster_matrix(b: BadWordSet) -> list[list[RationalFunction]]:
    """``a_ij = -(b_i : b_j)`` (zero when the overlap is empty)."""
    return [[-overlap_weight(u, v) for v in b.words] for u in b.words]


def cluster_weights(b: BadWordSet) -> list[RationalFunction]:
    """Solve ``L_v = -s^|v| - sum_u (u : v) L_u`` for every bad word ``v``."""
    words = b.words
    n = len(words)
    A = [[RationalFunction(1 if i == j else 0) + overlap_weight(words[j], words[i])
          for j in range(n)] for i in range(n)]
    rhs = [RationalFunction(-Poly.monomial(len(v))) for v in words]
    return solve_linear(A, rhs)


def gj_linear(b: BadWordSet) -> RationalFunction:
    """Generating function ``1 / (1 - k s - L)`` of words avoiding ``b``."""
    L = sum(cluster_weights(b), RationalFunction(0))
    s = RationalFunction.var()
    return 1 / (1 - b.k * s - L)


@dataclass(frozen=True)
class CyclicResult:
    genfun: RationalFunction
    main: RationalFunction          # (1 + s L' - L) / (1 - k s - L)
    corrections: tuple[RationalFunction, ...]   # chop_{l_i}(m_ii)
    chopped: Poly                   # total of the low-order terms chop removed

    def series(self, order: int) -> list[Fraction]:
        return series_coefficients(self.genfun, order)


def gj_cyclic(b: BadWordSet) -> CyclicResult:
    """Edlin-Zeilberger generating function for rooted cyclic words."""
    s = RationalFunction.var()
    L_parts = cluster_weights(b)
    L = sum(L_parts, RationalFunction(0))
    main = (1 + s * L.derivative() - L) / (1 - b.k * s - L)
    n = len(b.words)
    if n == 0:
        return CyclicResult(main, main, (), Poly())
    A = cluster_matrix(b)
    I_minus_A = [[RationalFunction(1 if i == j else 0) - A[i][j] for j in range(n)] for i in range(n)]
    sdA = [[s * A[i][j].derivative() for j in range(n)] for i in range(n)]
    M = mat_mul(A, mat_solve(I_minus_A, sdA))
    corrections = []
    chopped = Poly()
    for i, w in enumerate(b.words):
        c = chop(M[i][i], len(w))
        chopped = chopped + Poly(series_coefficients(M[i][i], len(w) - 1))
        corrections.append(c)
    total = main
    for c in corrections:
        total = total + c
    return CyclicResult(total, main, tuple(corrections), chopped)


def _avoids_linear(word: Word, bad: Sequence[Word]) -> bool:
    return not any(_is_factor(v, word) for v in bad)


def _avoids_cyclic(word: Word, bad: Sequence[Word]) -> bool:
    """Circular containment: windows wrap across the seam.  A factor longer
    than the word is read on the periodic extension."""
    n = len(word)
    for v in bad:
        m = len(v)
        for i in range(n):
            if all(word[(i + t) % n] == v[t] for t in range(m)):
                return False
    return True


def _avoids_cyclic_short(word: Word, bad: Sequence[Word]) -> bool:
    """Circular containment for factors no longer than the word only."""
    return _avoids_cyclic(word, [v for v in bad if len(v) <= len(word)])


CYCLIC_CONVENTIONS = {"periodic": _avoids_cyclic, "fits": _avoids_cyclic_short}


def _word_array(k: int, n: int) -> np.ndarray:
    """All ``k^n`` words of length ``n`` as rows, lexicographic order."""
    digits = np.arange(k ** n, dtype=np.int64)
    cols = [(digits // k ** (n - 1 - i)) % k for i in range(n)]
    return np.stack(cols, axis=1).astype(np.int8)


def brute_force_words(b: BadWordSet, n: int, cyclic: bool = False,
                      convention: str = "periodic") -> int:
    """Count length-``n`` words over ``b.k`` symbols avoiding every bad word.

    ``convention`` only matters for cyclic words shorter than some bad word:
    ``"periodic"`` reads long factors on the periodic extension, ``"fits"``
    ignores factors longer than the word.
    """
    if convention not in CYCLIC_CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if n == 0:
        return 1
    if b.k ** n > budget.limit("words"):
        raise SizeBudgetExceeded(f"{b.k}^{n} words exceeds the brute-force budget")
    words = _word_array(b.k, n)
    alive = np.ones(words.shape[0], dtype=bool)
    for v in b.words:
        m = len(v)
        if cyclic:
            if m > n and convention == "fits":
                continue
            starts = range(n)
        else:
            starts = range(n - m + 1)
        for i in starts:
            hit = np.ones(words.shape[0], dtype=bool)
            for t, c in enumerate(v):
                hit &= words[:, (i + t) % n] == c
            alive &= ~hit
    return int(np.count_nonzero(alive))


def brute_force_words_slow(b: BadWordSet, n: int, cyclic: bool = False,
                           convention: str = "periodic") -> int:
    """Plain-Python scan with the same semantics, kept as a cross-check."""
    if n == 0:
        return 1
    check = CYCLIC_CONVENTIONS[convention] if cyclic else _avoids_linear
    return sum(1 for w in product(range(b.k), repeat=n) if check(w, b.words))
