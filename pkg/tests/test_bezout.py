from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quatroots.bezout import (
    ExactMatrix,
    barnett_stack,
    bezout_matrix,
    bezoutian,
    exact_det,
    exact_rank,
    gcd_degree_barnett,
    sylvester_resultant,
)
from quatroots.errors import DegreeTooSmallError, DegreeViolationError, ZeroPolynomialError
from quatroots.poly import ComplexPoly, RealPoly, euclid_gcd
from quatroots.scalar import GaussianRational

from conftest import complex_polys, gaussians, minor_rank, real_polys, to_sympy

ci = GaussianRational(0, 1)
x = RealPoly.t()
f_run = ComplexPoly([0, -ci, 1])
g_run = ComplexPoly([-1, -ci])


def _m(rows):
    return [[GaussianRational.coerce(v) for v in r] for r in rows]


def test_bezout_matrix_examples():
    assert bezout_matrix(x, RealPoly([1])).tolist() == [[1]]
    assert bezout_matrix(f_run, g_run).tolist() == _m([[ci, -1], [-1, -ci]])
    assert bezout_matrix(x**3 + x, -(x**2) - 1).tolist() == [[-1, 0, -1], [0, 0, 0], [-1, 0, -1]]


def test_bezout_matrix_errors():
    with pytest.raises(ZeroPolynomialError):
        bezout_matrix(RealPoly(), RealPoly())
    with pytest.raises(DegreeTooSmallError):
        bezout_matrix(RealPoly([2]), RealPoly([3]))


def _sympy_bezout(P, Q):
    """Coefficients of the exact bivariate quotient (P(x)Q(y) - P(y)Q(x)) / (x - y)."""
    X, Y = sympy.symbols("X Y")
    sp, sq = to_sympy(P).as_expr(), to_sympy(Q).as_expr()
    s = sympy.Symbol("x")
    num = sympy.expand(sp.subs(s, X) * sq.subs(s, Y) - sp.subs(s, Y) * sq.subs(s, X))
    quo, rem = sympy.div(sympy.Poly(num, X, Y), sympy.Poly(X - Y, X, Y))
    assert rem.is_zero
    d = max(P.degree, Q.degree)
    return [[quo.as_expr().coeff(X, i).coeff(Y, j) for j in range(d)] for i in range(d)]


def _as_sympy(v):
    v = GaussianRational.coerce(v)
    return sympy.Rational(v.re.numerator, v.re.denominator) + sympy.I * sympy.Rational(
        v.im.numerator, v.im.denominator)


@settings(max_examples=40, deadline=None)
@given(complex_polys(5), complex_polys(5))
def test_bezout_matrix_matches_bivariate_division(P, Q):
    assume(max(P.degree, Q.degree) >= 1)
    got = bezout_matrix(P, Q).tolist()
    want = _sympy_bezout(P, Q)
    assert [[_as_sympy(v) for v in r] for r in got] == [[sympy.expand(v) for v in r] for r in want]


@given(complex_polys(7), complex_polys(7))
def test_bezout_matrix_symmetric(P, Q):
    assume(max(P.degree, Q.degree) >= 1)
    assert bezout_matrix(P, Q).is_symmetric()


def test_bezoutian_examples():
    assert bezoutian(f_run, g_run) == 0
    assert bezoutian(x, RealPoly([1])) == 1
    P, Q = x**2 + 1, x
    # n = 2, m = 1: sign (-1)^1, p0 = 1
    assert bezoutian(P, Q) == -sylvester_resultant(P, Q)
    assert sylvester_resultant(P, Q) == 1


def test_sylvester_resultant_examples():
    b1, b0, c1, c0 = (GaussianRational(3, 1), GaussianRational(-2), GaussianRational(0, 5),
                      GaussianRational(Fraction(1, 2), 1))
    f = ComplexPoly([b0, b1, 1])
    g = ComplexPoly([c0, c1])
    assert sylvester_resultant(f, g) == c0 * c0 - c0 * b1 * c1 + b0 * c1 * c1
    assert sylvester_resultant(f_run, g_run) == 0
    assert sylvester_resultant(x**3 - 2, RealPoly([1])) == 1


@settings(max_examples=60)
@given(real_polys(6), real_polys(6))
def test_resultant_matches_sympy(P, Q):
    assume(P.degree >= 1 and Q.degree >= 1)
    # sympy.resultant swaps arguments when deg P < deg Q; the Sylvester determinant does not
    from sympy.polys.subresultants_qq_zz import sylvester
    want = sylvester(to_sympy(P).as_expr(), to_sympy(Q).as_expr(), sympy.Symbol("x"), 1).det()
    got = sylvester_resultant(P, Q)
    assert sympy.Rational(got.numerator, got.denominator) == want


@settings(max_examples=100)
@given(real_polys(7), real_polys(6))
def test_bezoutian_resultant_identity(P, Q):
    n, m = P.degree, Q.degree
    assume(n >= m >= 1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    assert bezoutian(P, Q) == sign * P.lc ** (n - m) * sylvester_resultant(P, Q)


@settings(max_examples=100)
@given(complex_polys(6), complex_polys(6))
def test_bezoutian_zero_iff_common_factor(P, Q):
    assume(P and Q and max(P.degree, Q.degree) >= 1)
    assert (bezoutian(P, Q) == 0) == (euclid_gcd([P, Q]).degree >= 1)


def test_exact_rank_examples():
    assert exact_rank(ExactMatrix.from_rows(_m([[ci, -1], [-1, -ci]]))) == 1
    assert exact_rank(ExactMatrix.zeros(3, 4)) == 0
    assert exact_rank(ExactMatrix.from_rows([[-1, 0, -1], [0, 0, 0], [-1, 0, -1]])) == 1


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.sampled_from([0, 0, 0, 1, -1, 2, Fraction(1, 2), 3]),
                                min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150)
@given(matrices)
def test_exact_rank_matches_minor_oracle(rows):
    m = ExactMatrix.from_rows([[Fraction(v) for v in r] for r in rows])
    assert exact_rank(m) == minor_rank(m.tolist())


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(gaussians, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_complex_rank_and_det_match_minor_oracle(rows):
    m = ExactMatrix.from_rows(rows)
    assert exact_rank(m) == minor_rank(rows)
    want = sympy.Matrix([[_as_sympy(v) for v in r] for r in rows]).det()
    assert sympy.expand(_as_sympy(exact_det(m)) - want) == 0


def test_low_rank_products():
    # outer product u v^T has rank 1
    u = [1, Fraction(2, 3), -4, 0]
    v = [Fraction(-1, 5), 7, 0, 2, 3]
    assert exact_rank(ExactMatrix.from_rows([[a * b for b in v] for a in u])) == 1


def test_barnett_stack_examples():
    P = x**3 + x
    s = barnett_stack(P, [RealPoly(), -(x**2) - 1, RealPoly()])
    assert (s.rows, s.cols) == (9, 3)
    rows = s.tolist()
    assert all(v == 0 for r in rows[:3] + rows[6:] for v in r)
    assert rows[3:6] == [[-1, 0, -1], [0, 0, 0], [-1, 0, -1]]
    assert barnett_stack(f_run, [g_run]) == bezout_matrix(f_run, g_run)


def test_barnett_stack_degree_violation():
    with pytest.raises(DegreeViolationError):
        barnett_stack(x**2, [x**2 + 1])
    with pytest.raises(DegreeViolationError):
        barnett_stack(x**2, [x**3])


def test_gcd_degree_barnett_examples():
    assert gcd_degree_barnett(x**3 + x, [-(x**2) - 1]) == 2
    assert gcd_degree_barnett(f_run, [g_run]) == 1
    assert gcd_degree_barnett(x**2, [x + 1]) == 0
    assert bezout_matrix(x**2, x + 1).tolist() == [[0, 1], [1, 1]]


@settings(max_examples=60, deadline=None)
@given(real_polys(3), st.lists(real_polys(4), min_size=1, max_size=3), real_polys(4))
def test_barnett_equals_euclid(c, qs, p0):
    assume(c.degree >= 0 and p0.degree >= 1)
    P = p0 * c
    Qs = [q * c % P if q else RealPoly() for q in qs]
    assert gcd_degree_barnett(P, Qs) == euclid_gcd([P, *Qs]).degree
