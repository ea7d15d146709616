"""Dense univariate polynomials over Q, Q(i) and the rational quaternions.

Coefficients are stored ascending (``coeffs[k]`` multiplies ``t**k``) with
trailing zeros trimmed, so the zero polynomial is ``()``.  The variable
commutes with every coefficient; products of quaternion polynomials are
formed as ``sum a_i * b_j`` in that order, and evaluation puts the powers of
the argument on the right of each coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import AllZeroError, ZeroPolynomialError
from .scalar import GaussianRational, Quaternion, to_rational

__all__ = [
    "RealPoly",
    "ComplexPoly",
    "QuatPoly",
    "RealRoot",
    "qpoly_mul",
    "qpoly_eval",
    "right_divide",
    "decompose",
    "recompose",
    "split_complex",
    "join_complex",
    "euclid_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "sturm_sequence",
    "sturm_real_root_count",
    "isolate_real_roots",
    "cauchy_bound",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class _Poly:
    __slots__ = ("coeffs",)
    _rank = -1

    def __init__(self, coeffs: Iterable = ()):
        cs = [self._coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _from_trusted(cls, cs: list):
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    # -- coefficient ring hooks -------------------------------------------
    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @staticmethod
    def _inv(c):
        raise NotImplementedError

    _zero = _ZERO
    _one = _ONE

    # -- constructors -------------------------------------------------------
    @classmethod
    def t(cls):
        return cls._from_trusted([cls._zero, cls._one])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, c, k: int):
        return cls([cls._zero] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable):
        """``(t - r_1)(t - r_2)...`` multiplied left to right."""
        p = cls([cls._one])
        for r in roots:
            p = p * cls([-cls._coerce(r), cls._one])
        return p

    # -- basic queries ------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return self.coeffs[k]
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self._zero

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == type(self).constant(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(map(str, self.coeffs))})"

    def __str__(self):
        return format_poly(self)

    # -- arithmetic ---------------------------------------------------------
    def _promote(self, other):
        """Return (a, b) with a common polynomial type, or None."""
        if isinstance(other, _Poly):
            cls = self if self._rank >= other._rank else other
            kind = type(cls)
            return self.lift(kind), other.lift(kind)
        try:
            kind = type(self)
            if self._rank < 2 and isinstance(other, Quaternion) and not other.is_complex():
                kind = QuatPoly
            elif self._rank < 1 and isinstance(other, GaussianRational) and other.im:
                kind = ComplexPoly
            return self.lift(kind), kind.constant(other)
        except (TypeError, ValueError):
            return None

    def lift(self, kind):
        if kind is type(self):
            return self
        if kind._rank < self._rank:
            raise TypeError(f"cannot lower {type(self).__name__} to {kind.__name__}")
        return kind._from_trusted([kind._coerce(c) for c in self.coeffs])

    def __neg__(self):
        return type(self)._from_trusted([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __add__(self, other):
        pair = self._promote(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = max(len(a.coeffs), len(b.coeffs))
        return type(a)._from_trusted([a[k] + b[k] for k in range(n)])

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        pair = self._promote(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = max(len(a.coeffs), len(b.coeffs))
        return type(a)._from_trusted([a[k] - b[k] for k in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._promote(other)
        if pair is None:
            return NotImplemented
        return _convolve(*pair)

    def __rmul__(self, other):
        pair = self._promote(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return _convolve(b, a)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = type(self).constant(self._one)
        for _ in range(k):
            out = out * self
        return out

    def scale_left(self, c):
        c = self._coerce(c)
        return type(self)._from_trusted([c * a for a in self.coeffs])

    def monic(self):
        """Left-multiply by the inverse of the leading coefficient."""
        if not self.coeffs:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        inv = self._inv(self.coeffs[-1])
        cs = [inv * a for a in self.coeffs]
        cs[-1] = self._one
        return type(self)._from_trusted(cs)

    def right_divmod(self, divisor):
        """``(q, r)`` with ``self = q*divisor + r`` and ``deg r < deg divisor``."""
        a, b = self._promote(divisor)
        if not b.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        db = b.degree
        rem = list(a.coeffs)
        if len(rem) <= db:
            return type(a)._from_trusted([]), a
        inv = a._inv(b.coeffs[-1])
        bc = b.coeffs
        quot = [a._zero] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] * inv
            quot[k] = c
            if not c:
                continue
            for j in range(db):
                rem[k + j] = rem[k + j] - c * bc[j]
            rem[k + db] = a._zero
        return type(a)._from_trusted(quot), type(a)._from_trusted(rem[:db])

    def __call__(self, x):
        return _horner(self, x)

    def conj(self):
        return type(self)._from_trusted([c.conjugate() for c in self.coeffs])


def _convolve(a: _Poly, b: _Poly) -> _Poly:
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return type(a)._from_trusted([])
    out = [a._zero] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if not x:
            continue
        for j, y in enumerate(bc):
            out[i + j] = out[i + j] + x * y
    return type(a)._from_trusted(out)


def _horner(p: _Poly, x):
    if isinstance(x, Quaternion) and p._rank < 2 and not x.is_complex():
        p = p.lift(QuatPoly)
    elif isinstance(x, GaussianRational) and p._rank < 1:
        p = p.lift(ComplexPoly)
    else:
        x = p._coerce(x) if p._rank >= 0 else x
    acc = p._zero
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


class _FieldPoly(_Poly):
    """Shared commutative-field operations (Q and Q(i))."""

    __slots__ = ()

    def __divmod__(self, other):
        return self.right_divmod(other)

    def __floordiv__(self, other):
        return self.right_divmod(other)[0]

    def __mod__(self, other):
        return self.right_divmod(other)[1]

    def exact_div(self, other):
        q, r = self.right_divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other) -> bool:
        """True iff ``self`` divides ``other``."""
        return not (other % self)

    def derivative(self):
        return type(self)._from_trusted([k * c for k, c in enumerate(self.coeffs)][1:])

    def to_numpy(self):
        import numpy as np
        return np.array([complex(c) for c in self.coeffs], dtype=complex)


class RealPoly(_FieldPoly):
    __slots__ = ()
    _rank = 0

    @staticmethod
    def _coerce(c):
        if isinstance(c, GaussianRational):
            if c.im:
                raise ValueError(f"{c} is not real")
            return c.re
        if isinstance(c, Quaternion):
            if not c.is_real():
                raise ValueError(f"{c} is not real")
            return c.x0
        return to_rational(c)

    @staticmethod
    def _inv(c):
        return 1 / c

    def conj(self):
        return self

    def sign_at(self, x) -> int:
        v = self(to_rational(x))
        return (v > 0) - (v < 0)

    def primitive_integer(self) -> list:
        """Integer coefficients of a positive rational multiple of self."""
        if not self.coeffs:
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        from math import gcd
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints]


class ComplexPoly(_FieldPoly):
    __slots__ = ()
    _rank = 1
    _zero = GaussianRational(0)
    _one = GaussianRational(1)

    @staticmethod
    def _coerce(c):
        return GaussianRational.coerce(c)

    @staticmethod
    def _inv(c):
        return c.inverse()

    def gaussian_integer_scale(self) -> int:
        """Smallest positive integer making every coefficient a Gaussian integer."""
        return lcm(1, *(d for c in self.coeffs for d in (c.re.denominator, c.im.denominator)))


class QuatPoly(_Poly):
    __slots__ = ()
    _rank = 2
    _zero = Quaternion(0)
    _one = Quaternion(1)

    @staticmethod
    def _coerce(c):
        return Quaternion.coerce(c)

    @staticmethod
    def _inv(c):
        return c.inverse()

    def is_complex(self) -> bool:
        return all(c.is_complex() for c in self.coeffs)

    def to_complex(self) -> ComplexPoly:
        return ComplexPoly([c.to_complex() for c in self.coeffs])

    def norm_poly(self) -> RealPoly:
        """The real polynomial ``conj(Q) * Q``; every root class of Q divides it."""
        prod = _convolve(self.conj(), self)
        return RealPoly([c.x0 for c in prod.coeffs])


def _rank_ok(p, kind):
    if not isinstance(p, _Poly):
        raise TypeError(f"expected a polynomial, got {type(p).__name__}")
    return p.lift(kind)


def qpoly_mul(a: QuatPoly, b: QuatPoly) -> QuatPoly:
    return _convolve(_rank_ok(a, QuatPoly), _rank_ok(b, QuatPoly))


def qpoly_eval(q: QuatPoly, x) -> Quaternion:
    """``sum a_i x^i`` with the powers of ``x`` to the right of each coefficient."""
    return _horner(_rank_ok(q, QuatPoly), Quaternion.coerce(x))


def right_divide(q: _Poly, b: _Poly):
    return q.right_divmod(b)


def decompose(q: QuatPoly) -> tuple[ComplexPoly, ComplexPoly]:
    """Split ``Q = f + k*g`` with ``f, g`` complex.

    A coefficient ``x0 + x1 i + x2 j + x3 k`` contributes ``x0 + x1 i`` to f
    and ``x3 + x2 i`` to g, since ``k*(x3 + x2 i) = x3 k + x2 j``.
    """
    q = _rank_ok(q, QuatPoly)
    f = ComplexPoly._from_trusted([GaussianRational._raw(c.x0, c.x1) for c in q.coeffs])
    g = ComplexPoly._from_trusted([GaussianRational._raw(c.x3, c.x2) for c in q.coeffs])
    return f, g


def recompose(f: ComplexPoly, g: ComplexPoly) -> QuatPoly:
    f, g = _rank_ok(f, ComplexPoly), _rank_ok(g, ComplexPoly)
    n = max(len(f), len(g))
    return QuatPoly._from_trusted(
        [Quaternion._raw(f[k].re, f[k].im, g[k].im, g[k].re) for k in range(n)]
    )


def split_complex(f: ComplexPoly) -> tuple[RealPoly, RealPoly]:
    f = _rank_ok(f, ComplexPoly)
    return (RealPoly._from_trusted([c.re for c in f.coeffs]),
            RealPoly._from_trusted([c.im for c in f.coeffs]))


def join_complex(f1: RealPoly, f2: RealPoly) -> ComplexPoly:
    n = max(len(f1), len(f2))
    return ComplexPoly._from_trusted([GaussianRational._raw(f1[k], f2[k]) for k in range(n)])


def euclid_gcd(ps: Sequence[_FieldPoly]):
    """Monic gcd of a family over Q or Q(i); zero members are ignored."""
    ps = list(ps)
    if not ps:
        raise AllZeroError("gcd of an empty family")
    kind = max((type(p) for p in ps), key=lambda k: k._rank)
    if kind is QuatPoly:
        raise TypeError("gcd is only defined here over commutative fields")
    nonzero = [p.lift(kind) for p in ps if p]
    if not nonzero:
        raise AllZeroError("every polynomial in the family is zero")
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        g = _gcd2(g, p)
        if g.degree == 0:
            break
    return g


def _gcd2(a, b):
    a, b = a.monic(), b.monic()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a % b
        a, b = b, (r.monic() if r else r)
    return a


def squarefree_part(p: _FieldPoly):
    """Monic ``p / gcd(p, p')``."""
    if not p:
        raise ZeroPolynomialError("square-free part of zero")
    if p.degree < 1:
        return p.monic()
    return p.monic().exact_div(euclid_gcd([p, p.derivative()]))


def squarefree_decomposition(p: _FieldPoly) -> list:
    """Yun's algorithm: ``[(a_1, 1), (a_2, 2), ...]`` with ``monic(p) = prod a_m^m``."""
    if not p:
        raise ZeroPolynomialError("square-free decomposition of zero")
    p = p.monic()
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = euclid_gcd([p, dp])
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    m = 1
    while b.degree >= 1:
        a = euclid_gcd([b, d]) if d else b
        if a.degree >= 1:
            out.append((a, m))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        m += 1
    return out


# -- real roots ----------------------------------------------------------------

def cauchy_bound(p: RealPoly) -> Fraction:
    """``1 + max |a_i / a_n|``; every complex root lies strictly inside."""
    if p.degree < 0:
        raise ZeroPolynomialError("bound of the zero polynomial")
    lc = p.lc
    if p.degree == 0:
        return _ONE
    return 1 + max(abs(c / lc) for c in p.coeffs[:-1])


def sturm_sequence(p: RealPoly) -> list:
    if not p:
        raise ZeroPolynomialError("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    while seq[-1]:
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_changes(seq, x: Fraction) -> int:
    changes = 0
    last = 0
    for s in seq:
        v = s(x)
        if v == 0:
            continue
        sgn = 1 if v > 0 else -1
        if last and sgn != last:
            changes += 1
        last = sgn
    return changes


def sturm_real_root_count(p: RealPoly, lo, hi, seq=None) -> int:
    """Number of distinct real roots in ``(lo, hi]``.

    Both endpoints must be non-roots; nudge them otherwise.
    """
    if not p:
        raise ZeroPolynomialError("root count of the zero polynomial")
    lo, hi = to_rational(lo), to_rational(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p(lo) == 0 or p(hi) == 0:
        raise ValueError("interval endpoints must not be roots")
    if seq is None:
        seq = sturm_sequence(p)
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


@dataclass(frozen=True)
class RealRoot:
    """An isolated real root: exact when ``value`` is set, else in ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    value: Fraction | None = None

    @property
    def exact(self) -> bool:
        return self.value is not None

    @property
    def approx(self) -> float:
        if self.value is not None:
            return float(self.value)
        return float((self.lo + self.hi) / 2)


def isolate_real_roots(p: RealPoly, width=Fraction(1, 10**12)) -> list[RealRoot]:
    """All distinct real roots of ``p``, sorted.

    Rational roots come back exact; the others as open intervals of width at
    most ``width`` that each contain exactly one root.
    """
    if not p:
        raise ZeroPolynomialError("real roots of the zero polynomial")
    width = to_rational(width)
    if p.degree < 1:
        return []
    sqf = squarefree_part(p)
    ints = RealPoly(sqf.primitive_integer())
    # a rational root a/b of the primitive integer form has b | lc
    den_bound = abs(int(ints.lc))
    rat_width = Fraction(1, 2 * den_bound * den_bound + 1)
    bound = cauchy_bound(sqf)
    roots: list[RealRoot] = []
    _isolate(sqf, sturm_sequence(sqf), -bound, bound, width, rat_width, den_bound, roots)
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots


def _isolate(p, seq, a, b, width, rat_width, den_bound, out):
    count = _sign_changes(seq, a) - _sign_changes(seq, b)
    if count == 0:
        return
    if count == 1:
        out.append(_refine(p, seq, a, b, width, rat_width, den_bound))
        return
    m = (a + b) / 2
    if p(m) == 0:
        out.append(RealRoot(m, m, m))
        q = p.exact_div(RealPoly([-m, 1]))
        qseq = sturm_sequence(q) if q.degree >= 1 else [q]
        _isolate(q, qseq, a, m, width, rat_width, den_bound, out)
        _isolate(q, qseq, m, b, width, rat_width, den_bound, out)
        return
    _isolate(p, seq, a, m, width, rat_width, den_bound, out)
    _isolate(p, seq, m, b, width, rat_width, den_bound, out)


def _refine(p, seq, a, b, width, rat_width, den_bound) -> RealRoot:
    va = _sign_changes(seq, a)
    target = min(width, rat_width)
    while b - a > target:
        m = (a + b) / 2
        if p(m) == 0:
            return RealRoot(m, m, m)
        vm = _sign_changes(seq, m)
        if va - vm == 1:
            b = m
        else:
            a, va = m, vm
    cand = ((a + b) / 2).limit_denominator(den_bound)
    if a < cand <= b and p(cand) == 0:
        return RealRoot(cand, cand, cand)
    return RealRoot(a, b, None)


# -- formatting ------------------------------------------------------------------

def _format_coeff(c) -> tuple[str, str, bool]:
    """(sign, body, is_unit_one) for a coefficient with the sign pulled out."""
    q = Quaternion.coerce(c)
    nonzero = [(v, u) for v, u in zip(q.coords, ("", "i", "j", "k")) if v]
    if len(nonzero) == 1:
        v, u = nonzero[0]
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        if not u:
            return sign, str(mag), mag == 1
        if mag == 1:
            return sign, u, False
        if mag.denominator == 1:
            return sign, f"{mag}{u}", False
        return sign, f"{mag}*{u}", False
    if nonzero[0][0] < 0:
        return "-", f"({-q})", False
    return "+", f"({q})", False


def format_poly(p: _Poly) -> str:
    """ASCII rendering, highest degree first, that the expression parser accepts."""
    if not p.coeffs:
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign, body, one = _format_coeff(c)
        var = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not var:
            text = body
        elif one:
            text = var
        else:
            text = f"{body}*{var}"
        terms.append((sign, text))
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, text in terms[1:]:
        out += f" {sign} {text}"
    return out
