"""Bezout matrices, Sylvester resultants and Barnett stacks over Q and Q(i).

Ranks and determinants use fraction-free (Bareiss) elimination.  Rational
matrices are first scaled row by row to integer matrices so the inner loops
run on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DegreeTooSmallError, DegreeViolationError, ZeroPolynomialError
from .poly import ComplexPoly, QuatPoly, RealPoly, _FieldPoly

__all__ = [
    "ExactMatrix",
    "bezout_matrix",
    "bezoutian",
    "sylvester_matrix",
    "sylvester_resultant",
    "exact_rank",
    "exact_det",
    "barnett_stack",
    "gcd_degree_barnett",
]


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix over Q or Q(i); ``entries`` is a tuple of row tuples."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = tuple(tuple(r) for r in rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int, zero=Fraction(0)) -> "ExactMatrix":
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list:
        return [list(r) for r in self.entries]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.entries == self.transpose().entries

    def rank(self) -> int:
        return exact_rank(self)

    def det(self):
        return exact_det(self)

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return ExactMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.entries]
        if not cells:
            return "[]"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _common_kind(*ps):
    kinds = [type(p) for p in ps]
    if QuatPoly in kinds:
        raise TypeError("Bezout machinery needs commutative coefficients")
    kind = ComplexPoly if ComplexPoly in kinds else RealPoly
    return kind, [p.lift(kind) for p in ps]


def bezout_matrix(P: _FieldPoly, Q: _FieldPoly) -> ExactMatrix:
    """Coefficients ``c[i][j]`` of ``(P(x)Q(y) - P(y)Q(x)) / (x - y)``.

    Uses ``(x^a y^b - x^b y^a)/(x - y) = sum_s x^(b+s) y^(a-1-s)`` for a > b.
    Any degrees are accepted here; the size is ``max(deg P, deg Q)``.
    """
    kind, (P, Q) = _common_kind(P, Q)
    if not P and not Q:
        raise ZeroPolynomialError("Bezout matrix of two zero polynomials")
    d = max(P.degree, Q.degree)
    if d < 1:
        raise DegreeTooSmallError("Bezout matrix needs max degree >= 1")
    zero = kind._zero
    c = [[zero] * d for _ in range(d)]
    for a in range(1, d + 1):
        pa, qa = P[a], Q[a]
        for b in range(a):
            w = pa * Q[b] - P[b] * qa
            if not w:
                continue
            for s in range(a - b):
                i, j = b + s, a - 1 - s
                c[i][j] = c[i][j] + w
    return ExactMatrix.from_rows(c, d)


def sylvester_matrix(P: _FieldPoly, Q: _FieldPoly) -> ExactMatrix:
    """The ``(m+n)``-square Sylvester matrix, P's shifted rows first."""
    kind, (P, Q) = _common_kind(P, Q)
    if not P or not Q:
        raise ZeroPolynomialError("Sylvester matrix of a zero polynomial")
    n, m = P.degree, Q.degree
    size = n + m
    zero = kind._zero
    rows = []
    pdesc = list(reversed(P.coeffs))
    qdesc = list(reversed(Q.coeffs))
    for r in range(m):
        rows.append([zero] * r + pdesc + [zero] * (size - r - n - 1))
    for r in range(n):
        rows.append([zero] * r + qdesc + [zero] * (size - r - m - 1))
    return ExactMatrix.from_rows(rows, size)


def sylvester_resultant(P: _FieldPoly, Q: _FieldPoly):
    """``R(P, Q)``; a 0x0 determinant is 1, so ``R(P, c) = c^deg P``."""
    kind, _ = _common_kind(P, Q)
    return kind._coerce(exact_det(sylvester_matrix(P, Q)))


def bezoutian(P: _FieldPoly, Q: _FieldPoly):
    """Determinant of the Bezout matrix."""
    kind, _ = _common_kind(P, Q)
    return kind._coerce(exact_det(bezout_matrix(P, Q)))


# -- elimination kernels ------------------------------------------------------------

def _to_integer_rows(m: ExactMatrix):
    """Scale each row to integers; returns (rows, product of scales) or None."""
    out = []
    scale = 1
    for r in m.entries:
        if not all(isinstance(x, (int, Fraction)) for x in r):
            return None
        den = lcm(1, *(Fraction(x).denominator for x in r))
        out.append([int(x * den) for x in r])
        scale *= den
    return out, scale


def _exact_int_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("Bareiss division was not exact")
    return q


def _field_div(a, b):
    return a / b


def exact_rank(m: ExactMatrix) -> int:
    """Rank by fraction-free row echelon reduction."""
    conv = _to_integer_rows(m)
    if conv is not None:
        return _bareiss_rank(conv[0], m.cols, _exact_int_div, 1)
    rows = [list(r) for r in m.entries]
    return _bareiss_rank(rows, m.cols, _field_div, Fraction(1))


def _bareiss_rank(rows: list, ncols: int, div, one) -> int:
    nrows = len(rows)
    r = 0
    prev = one
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        prow = rows[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = div(piv * row[j] - f * prow[j], prev)
            else:
                for j in range(c + 1, ncols):
                    row[j] = div(piv * row[j], prev)
            row[c] = 0 * f
        prev = piv
        r += 1
    return r


def exact_det(m: ExactMatrix):
    """Determinant by Bareiss elimination on a square matrix."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    conv = _to_integer_rows(m)
    if conv is not None:
        rows, scale = conv
        return Fraction(_bareiss_det(rows, _exact_int_div, 1), scale)
    return _bareiss_det([list(r) for r in m.entries], _field_div, Fraction(1))


def _bareiss_det(a: list, div, one):
    n = len(a)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return 0 * a[k][k]
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = div(akk * rowi[j] - aik * rowk[j], prev)
        prev = akk
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


# -- Barnett ----------------------------------------------------------------------

def barnett_stack(P: _FieldPoly, Qs: Sequence[_FieldPoly]) -> ExactMatrix:
    """Vertical stack of ``Bez(P, Q_j)``; needs ``deg Q_j < deg P``."""
    kind, lifted = _common_kind(P, *Qs)
    P, Qs = lifted[0], lifted[1:]
    n = P.degree
    if n < 1:
        raise DegreeTooSmallError("Barnett stack needs deg P >= 1")
    for j, q in enumerate(Qs):
        if q.degree >= n:
            raise DegreeViolationError(
                f"member {j} has degree {q.degree}, must be below deg P = {n}")
    out = ExactMatrix(0, n, ())
    for q in Qs:
        out = out.vstack(bezout_matrix(P, q))
    return out


def gcd_degree_barnett(P: _FieldPoly, Qs: Sequence[_FieldPoly]) -> int:
    """``deg gcd(P, Q_1, ..., Q_k) = deg P - rank B_P(Q_1, ..., Q_k)``."""
    return P.degree - exact_rank(barnett_stack(P, Qs))
