import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from quatroots.poly import ComplexPoly, QuatPoly, RealPoly
from quatroots.scalar import GaussianRational, Quaternion

I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)
t = QuatPoly.t()


# -- hypothesis strategies -------------------------------------------------------

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(bool)
gaussians = st.builds(GaussianRational, rationals, rationals)
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)
nonzero_quaternions = quaternions.filter(bool)


def real_polys(max_degree=6):
    return st.lists(rationals, max_size=max_degree + 1).map(RealPoly)


def complex_polys(max_degree=6):
    return st.lists(gaussians, max_size=max_degree + 1).map(ComplexPoly)


def quat_polys(max_degree=5, min_size=0):
    return st.lists(quaternions, min_size=min_size, max_size=max_degree + 1).map(QuatPoly)


# -- seeded generators for the large sweeps -------------------------------------

class Gen:
    def __init__(self, seed):
        self.rng = random.Random(seed)

    def rational(self, lim=9, den=5):
        return Fraction(self.rng.randint(-lim, lim), self.rng.randint(1, den))

    def nonzero_rational(self, lim=9, den=5):
        while True:
            r = self.rational(lim, den)
            if r:
                return r

    def gaussian(self, lim=9, den=5):
        return GaussianRational(self.rational(lim, den), self.rational(lim, den))

    def quaternion(self, lim=5, den=3):
        return Quaternion(*(self.rational(lim, den) for _ in range(4)))

    def nonzero_quaternion(self, lim=5, den=3):
        while True:
            q = self.quaternion(lim, den)
            if q:
                return q

    def real_poly(self, deg, monic=False, lim=9, den=5):
        lead = Fraction(1) if monic else self.nonzero_rational(3, 4)
        return RealPoly([self.rational(lim, den) for _ in range(deg)] + [lead])

    def complex_poly(self, deg, monic=False):
        lead = GaussianRational(1) if monic else self.gaussian(3, 4) or GaussianRational(1)
        return ComplexPoly([self.gaussian() for _ in range(deg)] + [lead])

    def monic_quat_poly(self, deg, lim=5, den=3):
        return QuatPoly([self.quaternion(lim, den) for _ in range(deg)] + [Quaternion(1)])


@pytest.fixture
def gen():
    return Gen(12345)


# -- independent oracles --------------------------------------------------------

def minor_rank(rows) -> int:
    """Rank as the size of the largest nonzero minor, minors by Leibniz expansion."""
    from itertools import combinations, permutations

    def det(m):
        n = len(m)
        total = 0
        for perm in permutations(range(n)):
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            prod = 1
            for r, c in enumerate(perm):
                prod = prod * m[r][c]
                if not prod:
                    break
            total = total + (-prod if inv % 2 else prod)
        return total

    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    for k in range(min(nr, nc), 0, -1):
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                if det([[rows[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def to_sympy(p):
    """A sympy Poly in x over QQ or QQ<I> from a RealPoly/ComplexPoly."""
    import sympy

    x = sympy.Symbol("x")
    expr = 0
    for k, c in enumerate(p.coeffs):
        if isinstance(c, GaussianRational):
            expr += (sympy.Rational(c.re.numerator, c.re.denominator)
                     + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)) * x**k
        else:
            expr += sympy.Rational(c.numerator, c.denominator) * x**k
    return sympy.Poly(expr, x, domain="QQ_I" if isinstance(p, ComplexPoly) else "QQ")


def from_sympy_number(v):
    import sympy

    v = sympy.nsimplify(v)
    re, im = sympy.re(v), sympy.im(v)
    return GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
