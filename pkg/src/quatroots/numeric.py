"""Floating-point root extraction for exact real and complex polynomials.

The exact layer does the hard part: input is split into square-free factors
with Yun's algorithm, so the Aberth iteration only ever sees simple roots
and multiplicities are exact.  Every returned root carries a rigorous upper
bound on ``|p(root)|``, obtained by evaluating ``p`` in exact arithmetic at
the binary value of the root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DegreeTooSmallError, NoConvergence, PairingAmbiguity
from .poly import ComplexPoly, RealPoly, squarefree_decomposition
from .scalar import GaussianRational

__all__ = [
    "ApproxRoot",
    "ConjugatePair",
    "all_complex_roots",
    "pair_conjugates",
    "sqrt_upper",
    "exact_residual_bound",
]

# Angular offset of the starting circle; keeps the start off any symmetry axis.
_ANGLE_OFFSET = 2.0 ** -0.5
DEFAULT_MAX_ITERS = 500


@dataclass(frozen=True)
class ApproxRoot:
    re: float
    im: float
    residual_bound: float
    multiplicity_hint: int = 1

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def as_gaussian(self) -> GaussianRational:
        """The exact binary value of this approximation."""
        return GaussianRational(Fraction(self.re), Fraction(self.im))


def sqrt_upper(x: Fraction) -> float:
    """Smallest-ish float ``s`` with ``s*s >= x`` (checked exactly)."""
    if x <= 0:
        return 0.0
    s = math.sqrt(float(x))
    while Fraction(s) * Fraction(s) < x:
        s = math.nextafter(s, math.inf)
    return s


def exact_residual_bound(p, z: complex) -> float:
    """Upper bound on ``|p(z)|`` with ``z`` read as its exact binary value."""
    zr = GaussianRational(Fraction(z.real), Fraction(z.imag))
    v = p.lift(ComplexPoly)(zr)
    return sqrt_upper(v.norm_sq())


def _abs_scale(coeffs: np.ndarray, z: complex) -> float:
    """``sum |a_i| |z|^i``: the size of p(z) if nothing cancelled."""
    r = abs(z)
    acc = 0.0
    for c in coeffs[::-1]:
        acc = acc * r + abs(c)
    return acc


def _aberth(asc: np.ndarray, max_iters: int) -> tuple[np.ndarray, bool]:
    n = len(asc) - 1
    desc = asc[::-1] / asc[-1]
    ddesc = np.polyder(desc)
    radius = 1.0 + float(np.max(np.abs(desc[1:])))
    k = np.arange(n)
    z = radius * np.exp(1j * (2 * np.pi * k / n + _ANGLE_OFFSET))
    eye = np.eye(n, dtype=bool)
    abs_desc = np.abs(desc)
    eps = np.finfo(float).eps
    active = np.ones(n, dtype=bool)
    for _ in range(max_iters):
        pv = np.polyval(desc, z)
        # a root is done once |p(z)| is down at Horner's rounding level
        noise = 8 * n * eps * np.polyval(abs_desc, np.abs(z))
        active &= ~(np.abs(pv) <= noise)
        if not active.any():
            break
        dv = np.polyval(ddesc, z)
        dv = np.where(dv == 0, 1e-300, dv)
        ratio = pv / dv
        diff = z[:, None] - z[None, :]
        diff[eye] = 1.0
        inv = 1.0 / diff
        inv[eye] = 0.0
        s = inv.sum(axis=1)
        denom = 1.0 - ratio * s
        denom = np.where(denom == 0, 1e-300, denom)
        w = ratio / denom
        z = np.where(active, z - w, z)
    else:
        return z, False
    # two Newton steps clean up the last bits
    for _ in range(2):
        pv = np.polyval(desc, z)
        dv = np.polyval(ddesc, z)
        ok = dv != 0
        z = np.where(ok, z - np.where(ok, pv / np.where(ok, dv, 1.0), 0.0), z)
    return z, True


def all_complex_roots(p, tol: float = 1e-10, max_iters: int = DEFAULT_MAX_ITERS) -> list[ApproxRoot]:
    """Every distinct complex root of an exact polynomial, with multiplicity.

    Roots come back sorted by (re, im), one entry per distinct root; the
    ``multiplicity_hint`` values add up to ``deg p``.  A root is accepted
    when its certified residual is at most ``tol`` times ``sum |a_i||z|^i``
    (a backward-error test, so it is scale free).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = p.lift(ComplexPoly)
    if p.degree < 1:
        raise DegreeTooSmallError("need degree >= 1")
    out: list[ApproxRoot] = []
    failed: list[ApproxRoot] = []
    p_np = p.to_numpy()
    for factor, mult in squarefree_decomposition(p):
        if factor.degree == 1:
            r = -factor.coeffs[0] / factor.coeffs[1]
            zs = np.array([complex(r)])
            converged = True
        else:
            zs, converged = _aberth(factor.to_numpy(), max_iters)
        for z in zs:
            z = complex(z)
            bound = exact_residual_bound(p, z)
            root = ApproxRoot(z.real, z.imag, bound, mult)
            if converged and bound <= tol * max(_abs_scale(p_np, z), np.finfo(float).tiny):
                out.append(root)
            else:
                failed.append(root)
    out.sort(key=lambda r: (r.re, r.im))
    if failed:
        raise NoConvergence(
            f"{len(failed)} root(s) of a degree-{p.degree} polynomial not certified "
            f"after {max_iters} iterations", partial=out + failed)
    return out


@dataclass(frozen=True)
class ConjugatePair:
    upper: ApproxRoot
    lower: ApproxRoot

    @property
    def re(self) -> float:
        return (self.upper.re + self.lower.re) / 2

    @property
    def imag_norm_sq(self) -> float:
        y = (self.upper.im - self.lower.im) / 2
        return y * y


def pair_conjugates(roots: list[ApproxRoot], p: RealPoly | None = None,
                    threshold: float | None = None) -> tuple[list[ConjugatePair], list[ApproxRoot]]:
    """Match non-real roots with their conjugates; return (pairs, real roots).

    Roots with ``|im|`` at most ``threshold`` count as real.  Matching is
    greedy by distance to the conjugate; a near tie raises
    :class:`PairingAmbiguity` instead of guessing.  When ``p`` is given the
    multiplicities must account for its whole degree.
    """
    if p is not None and sum(r.multiplicity_hint for r in roots) != p.degree:
        raise PairingAmbiguity(f"roots cover degree {sum(r.multiplicity_hint for r in roots)}, "
                               f"polynomial has degree {p.degree}")
    if threshold is None:
        scale = max([1.0] + [abs(r.value) for r in roots])
        threshold = 1e-8 * scale
    reals = [r for r in roots if abs(r.im) <= threshold]
    upper = sorted((r for r in roots if r.im > threshold), key=lambda r: (r.re, r.im))
    lower = [r for r in roots if r.im < -threshold]
    pairs = []
    for u in upper:
        target = u.value.conjugate()
        dists = sorted(((abs(l.value - target), idx) for idx, l in enumerate(lower)))
        if not dists:
            raise PairingAmbiguity(f"no conjugate partner for {u.value}")
        best, idx = dists[0]
        if len(dists) > 1:
            second = dists[1][0]
            if second - best <= 1e-9 * max(1.0, abs(target)) and second > 0:
                raise PairingAmbiguity(f"two conjugate candidates tie for {u.value}")
        if best > max(threshold, 1e-6 * max(1.0, abs(target))):
            raise PairingAmbiguity(f"nearest conjugate candidate for {u.value} is {best:.3g} away")
        pairs.append(ConjugatePair(u, lower.pop(idx)))
    if lower:
        raise PairingAmbiguity(f"{len(lower)} root(s) below the real axis left unpaired")
    reals.sort(key=lambda r: r.re)
    return pairs, reals
