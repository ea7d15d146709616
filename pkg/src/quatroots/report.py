"""JSON and plain-text rendering of analysis results.

Exact rationals are encoded as ``{"num": "...", "den": "..."}``; floating
approximations as decimal strings with a ``precision`` field giving the
number of significant digits.  Field names and order are fixed; see
``docs/report-schema.md``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .analysis import ComplexRoot, Flag, Heights, QuadraticSolution, RootBounds, RootReport
from .bezout import ExactMatrix
from .poly import RealRoot, _Poly, format_poly
from .scalar import GaussianRational, Quaternion, SphericalClassRep

SCHEMA = "quatroots.report/1"
PRECISION = 17


def rational(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def decimal(x: float) -> str:
    return format(float(x), f".{PRECISION}g")


def approx(x: float) -> dict:
    return {"value": decimal(x), "precision": PRECISION}


def gaussian(z) -> dict:
    z = GaussianRational.coerce(z)
    return {"re": rational(z.re), "im": rational(z.im)}


def quaternion(q) -> dict:
    q = Quaternion.coerce(q)
    return {"x0": rational(q.x0), "x1": rational(q.x1), "x2": rational(q.x2), "x3": rational(q.x3),
            "text": str(q)}


def _coeff(c):
    if isinstance(c, Quaternion):
        return quaternion(c)
    if isinstance(c, GaussianRational):
        return gaussian(c)
    return rational(c)


def poly(p: _Poly) -> dict:
    return {"text": format_poly(p), "degree": p.degree, "coefficients": [_coeff(c) for c in p.coeffs]}


def matrix(m: ExactMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [[_coeff(x) for x in r] for r in m.entries]}


def real_root(r: RealRoot) -> dict:
    if r.exact:
        return {"exact": rational(r.value), "interval": None}
    return {"exact": None, "interval": {"lo": rational(r.lo), "hi": rational(r.hi)}}


def spherical(s: SphericalClassRep) -> dict:
    return {"re": rational(s.re), "imag_norm_sq": rational(s.imag_norm_sq), "exact": s.exact}


def complex_root(z: ComplexRoot) -> dict:
    return {
        "approx": {"re": decimal(z.re), "im": decimal(z.im), "precision": PRECISION},
        "exact": gaussian(z.exact) if z.exact is not None else None,
        "residual_bound": decimal(z.residual_bound),
        "multiplicity": z.multiplicity_hint,
    }


def heights_dict(h: Heights) -> dict:
    return {
        "H_Q_squared": rational(h.h_q_sq),
        "H1_squared": rational(h.h1_sq),
        "H2": rational(h.h2),
        "H_Q": approx(h.h_q),
        "H1": approx(h.h1),
        "excluded_components": list(h.excluded),
    }


def bounds_dict(b: RootBounds) -> dict:
    """Each radius is ``1 + sqrt(excess_squared)``; the decimal is rounded up."""
    return {
        "general": {"radius": approx(b.general), "excess_squared": rational(b.general_sq)},
        "isolated_complex": {"radius": approx(b.isolated_complex),
                             "excess_squared": rational(b.isolated_complex_sq)},
        "spherical": {"radius": approx(b.spherical), "excess_squared": rational(b.spherical_sq)},
    }


def flag(f: Flag) -> dict:
    return {"name": f.name, "status": f.status, "detail": f.detail}


def report_dict(r: RootReport) -> dict:
    return {
        "schema": SCHEMA,
        "input": poly(r.input),
        "leading_coefficient": quaternion(r.leading_coefficient),
        "monic_input": poly(r.monic_input),
        "decomposition": {"f": poly(r.f), "g": poly(r.g), "f1": poly(r.f1), "f2": poly(r.f2),
                          "g1": poly(r.g1), "g2": poly(r.g2)},
        "E": poly(r.E),
        "D": poly(r.D),
        "rank_bez_fg": r.rank_bez_fg,
        "rank_barnett": r.rank_barnett,
        "bezoutian_fg": gaussian(r.bezoutian_fg),
        "has_complex_root": r.has_complex_root,
        "max_complex_roots": r.max_complex_roots,
        "has_real_root": r.has_real_root,
        "real_roots": [real_root(x) for x in r.real_roots],
        "has_spherical_root": r.has_spherical_root,
        "spherical_classes": None if r.spherical_classes is None
        else [spherical(s) for s in r.spherical_classes],
        "has_isolated_complex_root": r.has_isolated_complex_root,
        "isolated_complex_roots": None if r.isolated_complex_roots is None
        else [complex_root(z) for z in r.isolated_complex_roots],
        "heights": heights_dict(r.heights),
        "bounds": bounds_dict(r.bounds),
        "input_in_complex_ring": r.input_in_complex_ring,
        "numeric": r.numeric,
        "consistency_flags": [flag(f) for f in r.consistency_flags],
    }


def quadratic_dict(s: QuadraticSolution) -> dict:
    return {"q": gaussian(s.q), "sigma": quaternion(s.sigma), "p": quaternion(s.p),
            "roots_coincide": s.coincide}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- text ------------------------------------------------------------------------

def _fmt_real_root(r: RealRoot) -> str:
    if r.exact:
        return str(r.value)
    return f"in ({float(r.lo):.15g}, {float(r.hi):.15g})"


def _fmt_complex_root(z: ComplexRoot) -> str:
    if z.exact is not None:
        return f"{z.exact}  (exact)"
    return f"{z.re:.15g} {'+' if z.im >= 0 else '-'} {abs(z.im):.15g}i  (|Q| <= {z.residual_bound:.3g})"


def report_text(r: RootReport) -> str:
    lines = [
        f"Q(t)        = {format_poly(r.input)}",
        f"monic       = {format_poly(r.monic_input)}",
        f"f, g        = {format_poly(r.f)} ; {format_poly(r.g)}",
        f"E(t)        = {format_poly(r.E)}   (rank Bez(f,g) = {r.rank_bez_fg})",
        f"D(t)        = {format_poly(r.D)}   (rank Barnett stack = {r.rank_barnett})",
        f"complex root: {'yes' if r.has_complex_root else 'no'}"
        f"   (at most {r.max_complex_roots})",
        f"real root   : {'yes' if r.has_real_root else 'no'}",
    ]
    for x in r.real_roots:
        lines.append(f"    {_fmt_real_root(x)}")
    lines.append(f"spherical   : {'yes' if r.has_spherical_root else 'no'}")
    for s in r.spherical_classes or []:
        tag = "" if s.exact else "  (approximate)"
        lines.append(f"    class Re = {s.re}, |Im|^2 = {s.imag_norm_sq}{tag}")
    lines.append(f"isolated complex: {'yes' if r.has_isolated_complex_root else 'no'}")
    for z in r.isolated_complex_roots or []:
        lines.append(f"    {_fmt_complex_root(z)}")
    b = r.bounds
    lines.append(f"bounds      : |root| < {b.general:.12g} ; isolated complex < "
                 f"{b.isolated_complex:.12g} ; spherical < {b.spherical:.12g}")
    bad = [f for f in r.consistency_flags if f.status in ("fail", "warning")]
    for f in bad:
        lines.append(f"[{f.status}] {f.name}: {f.detail}")
    return "\n".join(lines) + "\n"
