"""Classification of the roots of a quaternion polynomial.

A monic ``Q`` of degree ``n`` is written ``Q = f + k g`` with ``f, g`` in
Q(i)[t], and further ``f = f1 + f2 i``, ``g = g1 + g2 i`` with real parts.
Two gcds drive everything:

* ``E = gcd(f, g)``: the largest monic right factor of ``Q`` in C[t]; its
  roots are exactly the complex roots of ``Q``.
* ``D = gcd(f1, f2, g1, g2)``: its real roots are the real roots of ``Q``
  and its non-real roots mark the spherical classes.

Both gcds are computed by Euclid and cross-checked against Bezout/Barnett
ranks, ``deg E = n - rank Bez(f, g)`` and
``deg D = n - rank B_f1(f2, g1, g2)``.  Root sizes are bounded by heights,
see :func:`heights` and :func:`root_bounds`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, nextafter, inf
from typing import Optional

from .bezout import barnett_stack, bezout_matrix, bezoutian, exact_rank
from .errors import (
    ConditionFails,
    ConsistencyError,
    DegreeZeroError,
    HasRealFactor,
    NoConvergence,
    NotQuaternionic,
    PairingAmbiguity,
)
from .numeric import (
    DEFAULT_MAX_ITERS,
    all_complex_roots,
    pair_conjugates,
    sqrt_upper,
)
from .poly import (
    ComplexPoly,
    QuatPoly,
    RealPoly,
    RealRoot,
    decompose,
    euclid_gcd,
    isolate_real_roots,
    split_complex,
    squarefree_part,
    sturm_real_root_count,
)
from .scalar import GaussianRational, Quaternion, SphericalClassRep

__all__ = [
    "Components",
    "Heights",
    "RootBounds",
    "ComplexRoot",
    "QuadraticSolution",
    "Flag",
    "RootReport",
    "components",
    "compute_E",
    "compute_D",
    "has_complex_root",
    "max_complex_roots",
    "real_roots",
    "has_real_root",
    "spherical_classes",
    "has_spherical_root",
    "isolated_complex_roots",
    "has_isolated_complex_root",
    "solve_quadratic_complex_case",
    "heights",
    "root_bounds",
    "comparison_bound",
    "enumerate_integer_roots",
    "classify",
    "strictly_inside",
]

K = Quaternion(0, 0, 0, 1)
DEFAULT_TOL = 1e-10


# -- decomposition ---------------------------------------------------------------

@dataclass(frozen=True)
class Components:
    monic: QuatPoly
    leading_coefficient: Quaternion
    f: ComplexPoly
    g: ComplexPoly
    f1: RealPoly
    f2: RealPoly
    g1: RealPoly
    g2: RealPoly

    @property
    def n(self) -> int:
        return self.monic.degree

    @property
    def real_parts(self) -> tuple:
        return (self.f1, self.f2, self.g1, self.g2)


def _as_quat(Q) -> QuatPoly:
    if isinstance(Q, QuatPoly):
        return Q
    if hasattr(Q, "lift"):
        return Q.lift(QuatPoly)
    return QuatPoly(Q)


def components(Q) -> Components:
    """Normalize to monic (left multiplication) and split into real parts."""
    Q = _as_quat(Q)
    if Q.degree < 1:
        raise DegreeZeroError("need a polynomial of degree >= 1")
    lc = Q.lc
    monic = Q.monic()
    f, g = decompose(monic)
    f1, f2 = split_complex(f)
    g1, g2 = split_complex(g)
    return Components(monic, lc, f, g, f1, f2, g1, g2)


def _comp(Q) -> Components:
    return Q if isinstance(Q, Components) else components(Q)


def compute_E(Q, check: bool = True) -> ComplexPoly:
    """Monic ``gcd(f, g)``, the largest complex right factor of ``Q``."""
    c = _comp(Q)
    E = euclid_gcd([c.f, c.g])
    if check:
        rank = exact_rank(bezout_matrix(c.f, c.g))
        if E.degree != c.n - rank:
            raise ConsistencyError(f"deg E = {E.degree} but n - rank Bez(f, g) = {c.n - rank}")
        if c.monic.right_divmod(E.lift(QuatPoly))[1]:
            raise ConsistencyError("E is not a right factor of Q")
    return E


def compute_D(Q, check: bool = True) -> RealPoly:
    """Monic ``gcd(f1, f2, g1, g2)``; zero components are skipped."""
    c = _comp(Q)
    D = euclid_gcd(list(c.real_parts))
    if check:
        rank = exact_rank(barnett_stack(c.f1, [c.f2, c.g1, c.g2]))
        if D.degree != c.n - rank:
            raise ConsistencyError(f"deg D = {D.degree} but n - rank B = {c.n - rank}")
        if not D.lift(ComplexPoly).divides(compute_E(c, check=False)):
            raise ConsistencyError("D does not divide E")
    return D


def has_complex_root(Q) -> bool:
    """True iff the Bezoutian of ``f`` and ``g`` vanishes."""
    c = _comp(Q)
    return bezoutian(c.f, c.g) == 0


def max_complex_roots(Q) -> int:
    c = _comp(Q)
    return c.n - exact_rank(bezout_matrix(c.f, c.g))


def real_roots(Q) -> list[RealRoot]:
    """Real roots of ``Q``: those of ``D``, exact when rational."""
    return isolate_real_roots(compute_D(Q, check=False))


def _real_radius_int(h_sq: Fraction) -> int:
    """An integer ``B >= 1 + sqrt(h_sq)``."""
    c = isqrt(h_sq.numerator // h_sq.denominator)
    while c * c < h_sq:
        c += 1
    return 1 + c


def has_real_root(Q) -> bool:
    """Sturm count of ``D`` over an interval containing every root of ``Q``."""
    c = _comp(Q)
    D = compute_D(c, check=False)
    if D.degree < 1:
        return False
    B = _real_radius_int(_height_sq(c.monic))
    return sturm_real_root_count(D, -B, B) > 0


# -- heights and bounds ------------------------------------------------------------

def _norm_sq(c) -> Fraction:
    if isinstance(c, Fraction):
        return c * c
    return c.norm_sq()


def _height_sq(p) -> Fraction:
    """``H(p)^2`` with ``H(p) = max(1, |a_i / a_0|)``, ``a_0`` the leading coefficient."""
    lead = _norm_sq(p.lc)
    return max([Fraction(1)] + [_norm_sq(a) / lead for a in p.coeffs[:-1]])


def _up(x: float) -> float:
    return nextafter(x, inf)


def _one_plus_up(s: float) -> float:
    """``1 + s`` rounded toward +inf."""
    total = 1.0 + s
    return total if Fraction(total) >= 1 + Fraction(s) else _up(total)


def strictly_inside(norm_sq: Fraction, h_sq: Fraction) -> bool:
    """Exact test of ``sqrt(norm_sq) < 1 + sqrt(h_sq)``."""
    N, X = Fraction(norm_sq), Fraction(h_sq)
    if N < 1:
        return True
    lhs = N + 1 - X
    if lhs < 0:
        return True
    return lhs * lhs < 4 * N


@dataclass(frozen=True)
class Heights:
    """Heights, kept exact: ``H(Q)^2``, ``H1^2`` and ``H2`` (already rational).

    ``H2`` is a minimum of heights of real polynomials, so it is rational
    without squaring.  Zero component polynomials have no height; their
    names are listed in ``excluded`` rather than being counted as 1.
    """

    h_q_sq: Fraction
    h1_sq: Fraction
    h2: Fraction
    excluded: tuple = ()

    @property
    def h_q(self) -> float:
        return sqrt_upper(self.h_q_sq)

    @property
    def h1(self) -> float:
        return sqrt_upper(self.h1_sq)

    @property
    def h2_float(self) -> float:
        return sqrt_upper(self.h2 * self.h2)


@dataclass(frozen=True)
class RootBounds:
    """Three radii, each of the form ``1 + sqrt(value)`` with exact ``value``.

    ``general`` holds for every root, ``isolated_complex`` for complex roots
    that are not spherical, ``spherical`` for every member of a spherical class.
    """

    general_sq: Fraction
    isolated_complex_sq: Fraction
    spherical_sq: Fraction

    @property
    def general(self) -> float:
        return _one_plus_up(sqrt_upper(self.general_sq))

    @property
    def isolated_complex(self) -> float:
        return _one_plus_up(sqrt_upper(self.isolated_complex_sq))

    @property
    def spherical(self) -> float:
        return _one_plus_up(sqrt_upper(self.spherical_sq))

    def inside(self, kind: str, norm_sq: Fraction) -> bool:
        key = {"general": self.general_sq,
               "isolated_complex": self.isolated_complex_sq,
               "spherical": self.spherical_sq}[kind]
        return strictly_inside(norm_sq, key)


def heights(Q) -> Heights:
    c = _comp(Q)
    h_q_sq = _height_sq(c.monic)
    excluded = []
    h1 = []
    for name, p in (("f", c.f), ("g", c.g)):
        if p:
            h1.append(_height_sq(p))
        else:
            excluded.append(name)
    h2 = []
    for name, p in zip(("f1", "f2", "g1", "g2"), c.real_parts):
        if p:
            lead = abs(p.lc)
            h2.append(max([Fraction(1)] + [abs(a) / lead for a in p.coeffs[:-1]]))
        else:
            excluded.append(name)
    return Heights(h_q_sq, min(h1), min(h2), tuple(excluded))


def root_bounds(Q) -> RootBounds:
    h = heights(Q)
    return RootBounds(h.h_q_sq, h.h1_sq, h.h2)


def comparison_bound(Q) -> float:
    """``max(1, sum |a_i|)`` for the monic normalization, rounded up."""
    c = _comp(Q)
    total = 0.0
    for a in c.monic.coeffs[:-1]:
        step = total + sqrt_upper(a.norm_sq())
        total = step if Fraction(step) >= Fraction(total) + Fraction(sqrt_upper(a.norm_sq())) else _up(step)
    return max(1.0, total)


# -- roots ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexRoot:
    """A complex root of ``Q``; ``exact`` is set when it is Gaussian-rational."""

    re: float
    im: float
    residual_bound: float
    multiplicity_hint: int = 1
    exact: Optional[GaussianRational] = None

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def as_quaternion(self) -> Quaternion:
        z = self.exact if self.exact is not None else GaussianRational(Fraction(self.re), Fraction(self.im))
        return Quaternion.coerce(z)

    @property
    def norm_sq(self) -> Fraction:
        return self.as_quaternion().norm_sq()


def _q_residual_bound(c: Components, z: GaussianRational) -> float:
    """``|Q(z)|`` for complex ``z`` equals ``sqrt(|f(z)|^2 + |g(z)|^2)``."""
    fz = c.f(z)
    gz = c.g(z) if c.g else GaussianRational(0)
    return sqrt_upper(fz.norm_sq() + gz.norm_sq())


def _rationalize(x: float, den_bound: int) -> Fraction:
    return Fraction(x).limit_denominator(max(1, den_bound))


def _gaussian_den_bound(p: ComplexPoly) -> int:
    """Bound on the denominators of Gaussian-rational roots of ``p``."""
    s = p.gaussian_integer_scale()
    lc = p.lc * s
    return int(lc.norm_sq())


def _isolated_factor(c: Components, E=None, D=None) -> ComplexPoly:
    """Square-free polynomial whose roots are the roots of E that are not roots of D."""
    E = compute_E(c, check=False) if E is None else E
    D = compute_D(c, check=False) if D is None else D
    Es = squarefree_part(E)
    return Es.exact_div(euclid_gcd([Es, D.lift(ComplexPoly)]))


def has_isolated_complex_root(Q) -> bool:
    """Exact: some root of E is not a root of D."""
    return _isolated_factor(_comp(Q)).degree > 0


def isolated_complex_roots(Q, tol: float = DEFAULT_TOL, max_iters: int = DEFAULT_MAX_ITERS,
                           E=None, D=None) -> list[ComplexRoot]:
    """Complex roots of ``Q`` outside every spherical class.

    Gaussian-rational roots are recovered exactly (and then have residual 0);
    the rest are Aberth approximations of the roots of E that D lacks.
    """
    c = _comp(Q)
    R = _isolated_factor(c, E, D)
    if R.degree < 1:
        return []
    approx = all_complex_roots(R, tol=tol, max_iters=max_iters)
    den = _gaussian_den_bound(R)
    out = []
    for r in approx:
        cand = GaussianRational(_rationalize(r.re, den), _rationalize(r.im, den))
        if not R(cand):
            out.append(ComplexRoot(float(cand.re), float(cand.im), 0.0, r.multiplicity_hint, cand))
        else:
            out.append(ComplexRoot(r.re, r.im, _q_residual_bound(c, r.as_gaussian()),
                                   r.multiplicity_hint, None))
    out.sort(key=lambda z: (z.re, z.im))
    return out


def _nonreal_part(D: RealPoly, reals: list[RealRoot]) -> RealPoly:
    """Square-free part of D with its rational real roots divided out."""
    P = squarefree_part(D) if D.degree >= 1 else D
    for r in reals:
        if r.exact:
            P = P.exact_div(RealPoly([-r.value, 1]))
    return P


def spherical_classes(Q, tol: float = DEFAULT_TOL, max_iters: int = DEFAULT_MAX_ITERS,
                      D=None, reals=None) -> list[SphericalClassRep]:
    """Conjugate pairs of non-real roots of D, one class representative each.

    A class is exact when ``t^2 - 2 re t + re^2 + imag_norm_sq`` is a rational
    factor of D (verified by exact division); otherwise its fields are
    rounded approximations and ``exact`` is False.
    """
    c = _comp(Q)
    D = compute_D(c, check=False) if D is None else D
    if D.degree < 2:
        return []
    reals = isolate_real_roots(D) if reals is None else reals
    P = _nonreal_part(D, reals)
    if P.degree < 2:
        return []
    roots = all_complex_roots(P, tol=tol, max_iters=max_iters)
    pairs, _ = pair_conjugates(roots, P)
    den = abs(int(RealPoly(P.primitive_integer()).lc))
    out = []
    for pair in pairs:
        b = _rationalize(-2 * pair.re, den)
        cst = _rationalize(pair.re * pair.re + pair.imag_norm_sq, den)
        quad = RealPoly([cst, b, 1])
        disc = b * b - 4 * cst
        if disc < 0 and quad.divides(P):
            out.append(SphericalClassRep(-b / 2, cst - b * b / 4))
        else:
            out.append(SphericalClassRep(Fraction(pair.re), Fraction(pair.imag_norm_sq), exact=False))
    out.sort(key=lambda s: (s.re, s.imag_norm_sq))
    return out


def _count_nonreal_pairs(D: RealPoly, reals: list[RealRoot]) -> int:
    if D.degree < 1:
        return 0
    return (squarefree_part(D).degree - len(reals)) // 2


def has_spherical_root(Q) -> bool:
    """True iff D has a non-real root (decided exactly, with Sturm)."""
    c = _comp(Q)
    D = compute_D(c, check=False)
    return _count_nonreal_pairs(D, isolate_real_roots(D) if D.degree >= 1 else []) > 0


# -- quadratic -------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticSolution:
    q: GaussianRational
    sigma: Quaternion
    p: Quaternion
    coincide: bool


def solve_quadratic_complex_case(Q) -> QuadraticSolution:
    """Both roots of a monic quadratic ``t^2 + q1 t + q0`` having a complex root.

    With ``q1 = b1 + k c1`` and ``q0 = b0 + k c0``, a complex root exists iff
    ``c0^2 - c0 b1 c1 + b0 c1^2 = 0``.  Then ``Q = (t - p)(t - q)`` with
    ``q = -c0/c1`` and ``p = -(b0 c1 / c0 + k c1)``, and the second root is
    ``sigma = (q - conj p)^-1 p (q - conj p)``.
    """
    c = _comp(Q)
    if c.n != 2:
        raise ValueError(f"expected a quadratic, got degree {c.n}")
    if not c.g:
        raise NotQuaternionic("polynomial lies in C[t]")
    D = compute_D(c, check=False)
    if D.degree > 0:
        raise HasRealFactor(f"real factor {D}")
    b0, b1 = c.f[0], c.f[1]
    c0, c1 = c.g[0], c.g[1]
    cond = c0 * c0 - c0 * b1 * c1 + b0 * c1 * c1
    if cond:
        raise ConditionFails(f"c0^2 - c0 b1 c1 + b0 c1^2 = {cond} != 0")
    if not c0 or not c1:
        raise ConsistencyError("c0 and c1 must both be nonzero when the condition holds")
    q = -c0 / c1
    p = -(Quaternion.coerce(b0 * c1 / c0) + K * Quaternion.coerce(c1))
    w = Quaternion.coerce(q) - p.conjugate()
    sigma = w.inverse() * p * w
    if c.monic(Quaternion.coerce(q)) or c.monic(sigma):
        raise ConsistencyError("quadratic roots failed exact evaluation")
    return QuadraticSolution(q, sigma, p, sigma == q)


# -- integer roots -----------------------------------------------------------------------

def _divisible_by_class(ints: list, x0: int, M: int) -> bool:
    """Does ``t^2 - 2 x0 t + M`` divide the integer polynomial ``ints``?"""
    a = b = 0
    two_x0 = 2 * x0
    for coef in reversed(ints):
        a, b = two_x0 * a + b, coef - a * M
    return a == 0 and b == 0


def _sphere_points(s: int):
    r = isqrt(s)
    for x1 in range(-r, r + 1):
        rest1 = s - x1 * x1
        r2 = isqrt(rest1)
        for x2 in range(-r2, r2 + 1):
            rest2 = rest1 - x2 * x2
            x3 = isqrt(rest2)
            if x3 * x3 == rest2:
                yield x1, x2, x3
                if x3:
                    yield x1, x2, -x3


def enumerate_integer_roots(Q) -> list[Quaternion]:
    """All roots with integer coordinates, sorted by coordinates.

    Only the ball ``|x| < 1 + H(Q)`` is searched.  Each root's class must
    divide the real norm polynomial ``conj(Q) Q``, which prunes the search
    to a handful of (real part, norm) pairs before any quaternion
    evaluation happens.
    """
    c = _comp(Q)
    X = _height_sq(c.monic)
    ints = c.monic.norm_poly().primitive_integer()
    B = _real_radius_int(X)
    found = []
    for x0 in range(-B, B + 1):
        s = 0
        while strictly_inside(Fraction(x0 * x0 + s), X):
            M = x0 * x0 + s
            # a real root x0 makes (t - x0)^2 divide the norm polynomial too
            if _divisible_by_class(ints, x0, M):
                for x1, x2, x3 in _sphere_points(s):
                    q = Quaternion(x0, x1, x2, x3)
                    if not c.monic(q):
                        found.append(q)
            s += 1
    found.sort(key=lambda q: q.coords)
    return found


# -- report ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Flag:
    name: str
    status: str  # "pass" | "fail" | "warning" | "not-applicable"
    detail: str = ""


@dataclass(frozen=True)
class RootReport:
    input: QuatPoly
    leading_coefficient: Quaternion
    monic_input: QuatPoly
    f: ComplexPoly
    g: ComplexPoly
    f1: RealPoly
    f2: RealPoly
    g1: RealPoly
    g2: RealPoly
    E: ComplexPoly
    D: RealPoly
    rank_bez_fg: int
    rank_barnett: int
    bezoutian_fg: GaussianRational
    has_complex_root: bool
    max_complex_roots: int
    has_real_root: bool
    real_roots: list
    has_spherical_root: bool
    spherical_classes: Optional[list]
    has_isolated_complex_root: bool
    isolated_complex_roots: Optional[list]
    heights: Heights
    bounds: RootBounds
    input_in_complex_ring: bool
    numeric: bool
    consistency_flags: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.monic_input.degree

    @property
    def failed_flags(self) -> list:
        return [f for f in self.consistency_flags if f.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed_flags


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def classify(Q, tol: float = DEFAULT_TOL, max_iters: int = DEFAULT_MAX_ITERS,
             numeric: bool = True) -> RootReport:
    """Run the whole pipeline and collect cross-checks in ``consistency_flags``.

    With ``numeric=False`` only exact data is produced: degrees, ranks,
    predicates and real roots; the two approximate root lists are None.
    """
    Q = _as_quat(Q)
    c = components(Q)
    n = c.n
    flags: list[Flag] = []

    E = compute_E(c, check=False)
    D = compute_D(c, check=False)
    bez_fg = bezout_matrix(c.f, c.g)
    rank_bez = exact_rank(bez_fg)
    rank_barnett = exact_rank(barnett_stack(c.f1, [c.f2, c.g1, c.g2]))
    bez_det = bezoutian(c.f, c.g)
    input_in_c = not c.g

    flags.append(Flag("deg_E_equals_n_minus_rank_bez", _status(E.degree == n - rank_bez),
                      f"deg E = {E.degree}, n - rank = {n - rank_bez}"))
    flags.append(Flag("E_is_right_factor",
                      _status(not c.monic.right_divmod(E.lift(QuatPoly))[1])))
    flags.append(Flag("deg_D_equals_n_minus_rank_barnett", _status(D.degree == n - rank_barnett),
                      f"deg D = {D.degree}, n - rank = {n - rank_barnett}"))
    flags.append(Flag("D_divides_E", _status(D.lift(ComplexPoly).divides(E))))
    has_cx = bez_det == 0
    flags.append(Flag("bezoutian_zero_iff_deg_E_positive", _status(has_cx == (E.degree > 0))))
    if input_in_c:
        flags.append(Flag("input_in_complex_ring", "warning",
                          "g = 0: classification extended to Q in C[t]"))

    # real roots
    hts = heights(c)
    bounds = RootBounds(hts.h_q_sq, hts.h1_sq, hts.h2)
    reals = isolate_real_roots(D) if D.degree >= 1 else []
    B = _real_radius_int(hts.h_q_sq)
    sturm_count = sturm_real_root_count(D, -B, B) if D.degree >= 1 else 0
    flags.append(Flag("sturm_count_matches_isolation", _status(sturm_count == len(reals)),
                      f"{sturm_count} vs {len(reals)}"))
    has_real = sturm_count > 0
    for r in reals:
        if r.exact:
            flags.append(Flag(f"real_root_{r.value}_evaluates_to_zero",
                              _status(not c.monic(Quaternion(r.value)))))

    # spherical, exact predicate
    n_pairs = _count_nonreal_pairs(D, reals)
    has_sph = n_pairs > 0
    if not has_real:
        flags.append(Flag("spherical_iff_barnett_rank_deficient",
                          _status(has_sph == (n > rank_barnett))))
        if D.degree > 0:
            flags.append(Flag("deg_D_even_without_real_roots", _status(D.degree % 2 == 0)))
        else:
            flags.append(Flag("deg_D_even_without_real_roots", "not-applicable", "D is constant"))
    else:
        flags.append(Flag("spherical_iff_barnett_rank_deficient", "not-applicable",
                          "Q has a real root"))
        flags.append(Flag("deg_D_even_without_real_roots", "not-applicable", "Q has a real root"))
    if D.degree == 0 and not has_real:
        flags.append(Flag("no_real_factor_implies_no_spherical", _status(not has_sph)))

    # isolated, exact predicate
    R = _isolated_factor(c, E, D)
    has_iso = R.degree > 0
    if not has_real:
        by_degree = E.degree > D.degree
        by_rank = rank_bez < rank_barnett
        if by_degree != by_rank:
            flags.append(Flag("isolated_iff_rank_bez_below_rank_barnett", "fail",
                              "degree and rank criteria disagree"))
        elif has_iso == by_degree:
            flags.append(Flag("isolated_iff_rank_bez_below_rank_barnett", "pass"))
        else:
            # E carries a spherical factor to a higher power than D does
            flags.append(Flag("isolated_iff_rank_bez_below_rank_barnett", "warning",
                              "deg E > deg D only through a repeated spherical factor; "
                              "no isolated complex root"))
    else:
        flags.append(Flag("isolated_iff_rank_bez_below_rank_barnett", "not-applicable",
                          "Q has a real root"))

    sph_list = None
    iso_list = None
    if numeric:
        residual_cap = tol * (1 + hts.h_q) ** n
        try:
            sph_list = spherical_classes(c, tol=tol, max_iters=max_iters, D=D, reals=reals)
            flags.append(Flag("spherical_class_count", _status(len(sph_list) == n_pairs)))
            inexact = [s for s in sph_list if not s.exact]
            if inexact:
                flags.append(Flag("spherical_classes_exact", "warning",
                                  f"{len(inexact)} class(es) only approximated"))
            else:
                flags.append(Flag("spherical_classes_exact", "pass"))
        except (NoConvergence, PairingAmbiguity) as exc:
            sph_list = []
            flags.append(Flag("spherical_classes_extracted", "fail", str(exc)))
        try:
            iso_list = isolated_complex_roots(c, tol=tol, max_iters=max_iters, E=E, D=D)
            bad = [z for z in iso_list if z.residual_bound > residual_cap]
            flags.append(Flag("isolated_root_residuals", _status(not bad),
                              f"cap {residual_cap:.3e}"))
        except NoConvergence as exc:
            iso_list = []
            flags.append(Flag("isolated_roots_extracted", "fail", str(exc)))

        inside = True
        for r in reals:
            edge = r.value if r.exact else max(abs(r.lo), abs(r.hi))
            inside &= bounds.inside("general", edge * edge)
            inside &= bounds.inside("isolated_complex", edge * edge)
        for s in sph_list:
            inside &= bounds.inside("spherical", s.norm_sq) and bounds.inside("general", s.norm_sq)
        for z in iso_list:
            inside &= bounds.inside("isolated_complex", z.norm_sq) and bounds.inside("general", z.norm_sq)
        flags.append(Flag("roots_within_height_bounds", _status(inside)))

    return RootReport(
        input=Q,
        leading_coefficient=c.leading_coefficient,
        monic_input=c.monic,
        f=c.f, g=c.g, f1=c.f1, f2=c.f2, g1=c.g1, g2=c.g2,
        E=E, D=D,
        rank_bez_fg=rank_bez,
        rank_barnett=rank_barnett,
        bezoutian_fg=GaussianRational.coerce(bez_det),
        has_complex_root=has_cx,
        max_complex_roots=n - rank_bez,
        has_real_root=has_real,
        real_roots=reals,
        has_spherical_root=has_sph,
        spherical_classes=sph_list,
        has_isolated_complex_root=has_iso,
        isolated_complex_roots=iso_list,
        heights=hts,
        bounds=bounds,
        input_in_complex_ring=input_in_c,
        numeric=numeric,
        consistency_flags=flags,
    )
