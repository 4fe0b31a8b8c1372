"""Exact univariate arithmetic over Q.

Dense polynomials with :class:`fractions.Fraction` coefficients (index =
degree), rational functions kept in reduced form, a fraction-free linear
solver that works over any exact field, truncated Taylor expansion and
Lagrange interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    DivisionByZeroPolynomial,
    DuplicatePoints,
    PoleAtOrigin,
    SingularSystem,
)

Number = int | Fraction


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Dense polynomial in one variable with rational coefficients.

    ``Poly([1, 2, 1])`` is ``1 + 2t + t^2``.  The zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "Poly":
        return cls([0] * degree + [c])

    @classmethod
    def var(cls) -> "Poly":
        return cls([0, 1])

    # -- basic protocol ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[_fmt(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{_fmt(c)}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    # -- ring operations --------------------------------------------------
    def __add__(self, other: "Poly | Number") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly | Number") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "Poly | Number") -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: "Poly | Number") -> "Poly":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly | Number") -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise DivisionByZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), Poly(rem)
        quot = [Fraction(0)] * (len(rem) - dq)
        lead = other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            quot[i - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly | Number") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly | Number") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly | Number") -> "Poly":
        """Quotient, raising ``ArithmeticError`` if the remainder is nonzero."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- calculus & evaluation --------------------------------------------
    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lead)

    def reversed(self, degree: int | None = None) -> "Poly":
        d = self.degree if degree is None else degree
        return Poly(self[d - i] for i in range(d + 1))

    def is_palindromic(self, degree: int | None = None) -> bool:
        d = self.degree if degree is None else degree
        return all(self[i] == self[d - i] for i in range(d + 1))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> list:
        return [_json_number(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "Poly":
        return cls(Fraction(c) for c in data)


def _as_poly(x: "Poly | Number") -> Poly:
    return x if isinstance(x, Poly) else Poly.const(x)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _json_number(c: Fraction) -> int | str:
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

class RationalFunction:
    """Quotient ``num/den`` of polynomials, stored reduced with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num: "Poly | Number", den: "Poly | Number" = 1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise DivisionByZeroPolynomial("zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = poly_gcd(num, den)
        num, den = num.exact_div(g), den.exact_div(g)
        scale = 1 / den.lead
        self.num, self.den = num * scale, den * scale

    @classmethod
    def var(cls) -> "RationalFunction":
        return cls(Poly.var())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num}) / ({self.den}))"

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.is_zero():
            raise DivisionByZeroPolynomial("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def __call__(self, x: Number) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def polynomial_part(self) -> tuple[Poly, "RationalFunction"]:
        """Split into polynomial quotient plus proper fraction."""
        q, r = divmod(self.num, self.den)
        return q, RationalFunction(r, self.den)

    def series(self, order: int) -> list[Fraction]:
        return series_coefficients(self, order)

    def integer_form(self) -> tuple[list[int], list[int]]:
        """Integer numerator and denominator, jointly primitive, with the
        denominator's leading coefficient positive."""
        lcm = 1
        for c in self.num.coeffs + self.den.coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        num = [int(c * lcm) for c in self.num.coeffs]
        den = [int(c * lcm) for c in self.den.coeffs]
        content = 0
        for c in num + den:
            content = gcd(content, c)
        if den[-1] < 0:
            content = -content
        return [c // content for c in num], [c // content for c in den]

    def __str__(self) -> str:
        num, den = self.integer_form()
        return f"({Poly(num)}) / ({Poly(den)})"

    def to_json(self) -> dict:
        num, den = self.integer_form()
        return {"num": num, "den": den}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


def _as_rf(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(x)


def series_coefficients(f: RationalFunction, order: int) -> list[Fraction]:
    """Taylor coefficients of ``f`` at 0 through ``s**order``."""
    den = f.den
    if den[0] == 0:
        raise PoleAtOrigin(f"{f} has a pole at the origin")
    d0 = den[0]
    out: list[Fraction] = []
    for i in range(order + 1):
        acc = f.num[i]
        for j in range(1, min(i, den.degree) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc / d0)
    return out


def chop(f: RationalFunction, r: int) -> RationalFunction:
    """Drop the Taylor terms of degree ``< r`` from ``f``."""
    head = Poly(series_coefficients(f, r - 1)) if r > 0 else Poly()
    return f - head


# ---------------------------------------------------------------------------
# linear algebra
# ---------------------------------------------------------------------------

def solve_linear(A: Sequence[Sequence], b: Sequence) -> list:
    """Solve ``A x = b`` exactly over any field (Fraction, RationalFunction).

    One-step Bareiss elimination on the augmented matrix, pivoting on the
    first nonzero entry of each column, followed by back substitution.
    """
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_linear needs a square system")
    if n == 0:
        return []
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if M[r][k]), None)
        if piv is None:
            raise SingularSystem(f"no pivot in column {k}")
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n + 1):
                M[i][j] = (pk * M[i][j] - mik * M[k][j]) / prev
            M[i][k] = M[i][k] - M[i][k]
        prev = pk
    x: list = [None] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n]
        for j in range(i + 1, n):
            acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    rows, inner, cols = len(A), len(B), len(B[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = A[i][0] * B[0][j]
            for k in range(1, inner):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_solve(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    """Solve ``A X = B`` column by column."""
    cols = [solve_linear(A, [row[j] for row in B]) for j in range(len(B[0]))]
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(A))]


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return 0
    r = 0
    cols = len(M[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c]:
                factor = M[i][c] / M[r][c]
                M[i] = [a - factor * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def integer_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix via Bareiss (exact, division-free)."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def interpolate(points: Sequence[tuple[Number, Number]]) -> Poly:
    """Lagrange interpolation through ``(x, y)`` pairs, exact over Q."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicatePoints("interpolation nodes must be distinct")
    result = Poly()
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        basis = Poly.const(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
