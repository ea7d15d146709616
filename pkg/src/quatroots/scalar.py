"""Exact scalars: rationals, Gaussian rationals and rational quaternions.

Rationals are :class:`fractions.Fraction` (always kept in lowest terms by the
standard library).  :class:`GaussianRational` and :class:`Quaternion` are
small immutable value types built on top of it.  Nothing in this module ever
takes a square root; norms are kept squared so every comparison is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "Quaternion",
    "SphericalClassRep",
    "to_rational",
    "quat_mul",
    "quat_inverse",
    "norm_sq",
    "congruent",
    "class_rep",
]


def to_rational(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would smuggle rounding into the exact layer.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _is_rational_like(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class GaussianRational:
    """Element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_rational(re))
        object.__setattr__(self, "im", to_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, Quaternion):
            if x.x2 or x.x3:
                raise ValueError(f"{x} is not a complex number")
            return cls._raw(x.x0, x.x1)
        return cls._raw(to_rational(x), Fraction(0))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return str(Quaternion._raw(self.re, self.im, Fraction(0), Fraction(0)))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if _is_rational_like(other):
            return self.im == 0 and self.re == other
        if isinstance(other, Quaternion):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return NotImplemented
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return NotImplemented
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational._raw(a * c - b * d, a * d + b * c)
        if isinstance(other, Quaternion):
            return NotImplemented
        try:
            r = to_rational(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._raw(self.re * r, self.im * r)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        try:
            r = to_rational(other)
        except TypeError:
            return NotImplemented
        if r == 0:
            raise ZeroDivisionError("division by zero")
        return GaussianRational._raw(self.re / r, self.im / r)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        return _int_pow(self, k, GaussianRational._raw(Fraction(1), Fraction(0)))

    def __complex__(self):
        return complex(float(self.re), float(self.im))


class Quaternion:
    """Quaternion ``x0 + x1 i + x2 j + x3 k`` with rational coordinates.

    ``*`` is the Hamilton product and is not commutative.  Division is only
    offered by scalars; use :meth:`inverse` and say which side you mean.

    >>> I, J, K = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
    >>> I * J == K, J * I == -K
    (True, True)
    """

    __slots__ = ("x0", "x1", "x2", "x3")

    def __init__(self, x0=0, x1=0, x2=0, x3=0):
        for name, v in zip(self.__slots__, (x0, x1, x2, x3)):
            object.__setattr__(self, name, to_rational(v))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def _raw(cls, x0, x1, x2, x3) -> "Quaternion":
        obj = object.__new__(cls)
        object.__setattr__(obj, "x0", x0)
        object.__setattr__(obj, "x1", x1)
        object.__setattr__(obj, "x2", x2)
        object.__setattr__(obj, "x3", x3)
        return obj

    @classmethod
    def coerce(cls, x) -> "Quaternion":
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, GaussianRational):
            return cls._raw(x.re, x.im, Fraction(0), Fraction(0))
        return cls._raw(to_rational(x), Fraction(0), Fraction(0), Fraction(0))

    @property
    def coords(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def real(self) -> Fraction:
        return self.x0

    def imag(self) -> "Quaternion":
        return Quaternion._raw(Fraction(0), self.x1, self.x2, self.x3)

    def is_real(self) -> bool:
        return not (self.x1 or self.x2 or self.x3)

    def is_complex(self) -> bool:
        return not (self.x2 or self.x3)

    def to_complex(self) -> GaussianRational:
        return GaussianRational.coerce(self)

    def __repr__(self):
        return "Quaternion({}, {}, {}, {})".format(*map(str, self.coords))

    def __str__(self):
        parts = []
        for c, unit in zip(self.coords, ("", "i", "j", "k")):
            if c == 0:
                continue
            mag = abs(c)
            if unit and mag == 1:
                body = unit
            else:
                body = f"{mag}{unit}" if mag.denominator == 1 or not unit else f"{mag}*{unit}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.x0 == other.x0 and self.x1 == other.x1
                    and self.x2 == other.x2 and self.x3 == other.x3)
        if isinstance(other, GaussianRational):
            return (self.x0 == other.re and self.x1 == other.im
                    and not self.x2 and not self.x3)
        if _is_rational_like(other):
            return self.is_real() and self.x0 == other
        return NotImplemented

    def __hash__(self):
        if self.is_complex():
            return hash(GaussianRational._raw(self.x0, self.x1))
        return hash(self.coords)

    def __bool__(self):
        return bool(self.x0) or bool(self.x1) or bool(self.x2) or bool(self.x3)

    def __neg__(self):
        return Quaternion._raw(-self.x0, -self.x1, -self.x2, -self.x3)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return Quaternion._raw(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return Quaternion._raw(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __mul__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return quat_mul(self, o)

    def __rmul__(self, other):
        try:
            o = Quaternion.coerce(other)
        except TypeError:
            return NotImplemented
        return quat_mul(o, self)

    def __truediv__(self, other):
        if isinstance(other, (Quaternion, GaussianRational)):
            raise TypeError("quaternion division is ambiguous; multiply by .inverse() on one side")
        r = to_rational(other)
        if r == 0:
            raise ZeroDivisionError("division by zero")
        return Quaternion._raw(self.x0 / r, self.x1 / r, self.x2 / r, self.x3 / r)

    def conjugate(self) -> "Quaternion":
        return Quaternion._raw(self.x0, -self.x1, -self.x2, -self.x3)

    def norm_sq(self) -> Fraction:
        return norm_sq(self)

    def inverse(self) -> "Quaternion":
        return quat_inverse(self)

    def __pow__(self, k: int):
        return _int_pow(self, k, Quaternion(1))


def _int_pow(x, k: int, one):
    """Square-and-multiply; negative exponents go through the inverse."""
    if not isinstance(k, int) or isinstance(k, bool):
        return NotImplemented
    if k < 0:
        x, k = x.inverse(), -k
    acc = one
    while k:
        if k & 1:
            acc = acc * x
        x = x * x
        k >>= 1
    return acc


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a*b``."""
    a0, a1, a2, a3 = a.x0, a.x1, a.x2, a.x3
    b0, b1, b2, b3 = b.x0, b.x1, b.x2, b.x3
    return Quaternion._raw(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def norm_sq(q) -> Fraction:
    """Squared norm ``x0^2 + x1^2 + x2^2 + x3^2``."""
    q = Quaternion.coerce(q)
    return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3


def quat_inverse(q: Quaternion) -> Quaternion:
    n = norm_sq(q)
    if n == 0:
        raise ZeroDivisionError("inverse of zero quaternion")
    return Quaternion._raw(q.x0 / n, -q.x1 / n, -q.x2 / n, -q.x3 / n)


@dataclass(frozen=True)
class SphericalClassRep:
    """A congruence class ``{q : Re q = re, |Im q|^2 = imag_norm_sq}``.

    The class contains the complex pair ``re +/- i*sqrt(imag_norm_sq)``.
    ``exact`` is False only for classes whose representative could not be
    certified as rational; the two fields are then rounded approximations.
    """

    re: Fraction
    imag_norm_sq: Fraction
    exact: bool = True

    def __post_init__(self):
        if self.imag_norm_sq < 0:
            raise ValueError("imag_norm_sq must be nonnegative")

    @property
    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.imag_norm_sq

    def contains(self, q) -> bool:
        return class_rep(q) == SphericalClassRep(self.re, self.imag_norm_sq, self.exact)

    def complex_member(self) -> complex:
        return complex(float(self.re), float(self.imag_norm_sq) ** 0.5)

    def char_poly_coeffs(self) -> tuple:
        """Ascending coefficients of ``t^2 - 2 re t + (re^2 + imag_norm_sq)``."""
        return (self.norm_sq, -2 * self.re, Fraction(1))


def class_rep(q) -> SphericalClassRep:
    q = Quaternion.coerce(q)
    return SphericalClassRep(q.x0, q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3)


def congruent(q, r) -> bool:
    """True iff ``r = w q w^-1`` for some nonzero ``w``."""
    q, r = Quaternion.coerce(q), Quaternion.coerce(r)
    return q.x0 == r.x0 and norm_sq(q) == norm_sq(r)
