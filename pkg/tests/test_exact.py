from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sympoly.errors import DivisionByZeroPolynomial, DuplicatePoints, PoleAtOrigin, SingularSystem
from sympoly.exact import (
    Poly, RationalFunction, chop, integer_det, interpolate, poly_gcd, rank,
    series_coefficients, solve_linear,
)

ints = st.integers(-6, 6)
polys = st.lists(ints, max_size=5).map(Poly)
nonzero_polys = polys.filter(bool)
S = sympy.Symbol("s")


def to_sympy(p: Poly):
    return sum(sympy.Rational(c.numerator, c.denominator) * S ** i for i, c in enumerate(p.coeffs))


def rf_to_sympy(f: RationalFunction):
    return to_sympy(f.num) / to_sympy(f.den)


@given(polys, polys)
def test_ring_ops_match_sympy(a, b):
    assert sympy.expand(to_sympy(a + b) - (to_sympy(a) + to_sympy(b))) == 0
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
    assert sympy.expand(to_sympy(a - b) - (to_sympy(a) - to_sympy(b))) == 0


@given(polys, nonzero_polys)
def test_divmod(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert not r or r.degree < b.degree


def test_division_by_zero():
    with pytest.raises(DivisionByZeroPolynomial):
        divmod(Poly([1]), Poly())


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert (a * c) % g == Poly() and (b * c) % g == Poly()
    assert (g % c.monic()) == Poly()
    assert g.lead == 1


def test_palindromic_and_eval():
    p = Poly([1, 5, 5, 1])
    assert p.is_palindromic(3)
    assert not Poly([1, 2]).is_palindromic(1)
    assert p(1) == 12
    assert p.derivative() == Poly([5, 10, 3])


@given(polys, nonzero_polys, polys, nonzero_polys)
@settings(deadline=None)
def test_rational_field_ops_match_sympy(a, b, c, d):
    f, g = RationalFunction(a, b), RationalFunction(c, d)
    assert sympy.simplify(rf_to_sympy(f + g) - (rf_to_sympy(f) + rf_to_sympy(g))) == 0
    assert sympy.simplify(rf_to_sympy(f * g) - rf_to_sympy(f) * rf_to_sympy(g)) == 0
    if g:
        assert sympy.simplify(rf_to_sympy(f / g) - rf_to_sympy(f) / rf_to_sympy(g)) == 0


def test_rational_is_reduced_and_monic():
    f = RationalFunction(Poly([-1, 0, 1]), Poly([2, 2]))
    assert f.den == Poly([1, 1]) * Fraction(1) or f.den.lead == 1
    assert f.num.degree == 1 and f.den.degree == 0


@given(polys, nonzero_polys.filter(lambda p: p[0] != 0))
@settings(deadline=None)
def test_series_matches_sympy(a, b):
    f = RationalFunction(a, b)
    ours = series_coefficients(f, 6)
    theirs = sympy.series(rf_to_sympy(f), S, 0, 7).removeO()
    for i, c in enumerate(ours):
        assert sympy.Rational(c.numerator, c.denominator) == theirs.coeff(S, i)


def test_pole_at_origin():
    with pytest.raises(PoleAtOrigin):
        series_coefficients(RationalFunction(1, Poly([0, 1])), 3)


def test_chop():
    f = RationalFunction(1, Poly([1, -1]))
    assert series_coefficients(chop(f, 3), 5) == [0, 0, 0, 1, 1, 1]


def test_derivative_quotient_rule():
    f = RationalFunction(Poly([1, 2]), Poly([1, -1, -1]))
    x = sympy.diff(rf_to_sympy(f), S)
    assert sympy.simplify(rf_to_sympy(f.derivative()) - x) == 0


def test_integer_form_and_json():
    f = RationalFunction(Poly([Fraction(1, 2), 1]), Poly([3, 6]))
    num, den = f.integer_form()
    assert all(isinstance(x, int) for x in num + den)
    assert RationalFunction.from_json(f.to_json()) == f
    assert Poly.from_json(Poly([1, Fraction(1, 3)]).to_json()) == Poly([1, Fraction(1, 3)])


matrices = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.lists(st.lists(ints, min_size=n, max_size=n), min_size=n, max_size=n),
                        st.lists(ints, min_size=n, max_size=n)))


@given(matrices)
def test_solve_linear_residual(data):
    A, b = data
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    if sympy.Matrix(A).det() == 0:
        with pytest.raises(SingularSystem):
            solve_linear(A, b)
        return
    x = solve_linear(A, b)
    assert [sum(a * y for a, y in zip(row, x)) for row in A] == b


@given(matrices)
def test_det_and_rank_match_sympy(data):
    A, _ = data
    assert integer_det(A) == sympy.Matrix(A).det()
    assert rank(A) == sympy.Matrix(A).rank()


def test_solve_over_rational_functions():
    s = RationalFunction.var()
    A = [[1 + s, s], [s, 1 - s]]
    b = [RationalFunction(1), s]
    x = solve_linear(A, b)
    assert A[0][0] * x[0] + A[0][1] * x[1] == b[0]
    assert A[1][0] * x[0] + A[1][1] * x[1] == b[1]


@given(st.lists(ints, min_size=1, max_size=6))
def test_interpolation_recovers_polynomial(coeffs):
    p = Poly(coeffs)
    pts = [(x, p(x)) for x in range(len(coeffs))]
    assert interpolate(pts) == p


def test_duplicate_nodes():
    with pytest.raises(DuplicatePoints):
        interpolate([(0, 1), (0, 2)])
