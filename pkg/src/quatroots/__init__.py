"""Exact root analysis of polynomials with rational quaternion coefficients."""

from .analysis import (
    RootReport,
    classify,
    compute_D,
    compute_E,
    enumerate_integer_roots,
    has_complex_root,
    has_isolated_complex_root,
    has_real_root,
    has_spherical_root,
    heights,
    isolated_complex_roots,
    max_complex_roots,
    root_bounds,
    solve_quadratic_complex_case,
    spherical_classes,
)
from .bezout import (
    ExactMatrix,
    barnett_stack,
    bezout_matrix,
    bezoutian,
    exact_rank,
    gcd_degree_barnett,
    sylvester_resultant,
)
from .expr import parse_poly
from .poly import ComplexPoly, QuatPoly, RealPoly, decompose, euclid_gcd, right_divide, split_complex
from .scalar import GaussianRational, Quaternion, SphericalClassRep, class_rep, congruent, norm_sq

__version__ = "0.1.0"

__all__ = [
    "ComplexPoly", "ExactMatrix", "GaussianRational", "QuatPoly", "Quaternion", "RealPoly",
    "RootReport", "SphericalClassRep",
    "barnett_stack", "bezout_matrix", "bezoutian", "class_rep", "classify", "compute_D",
    "compute_E", "congruent", "decompose", "enumerate_integer_roots", "euclid_gcd",
    "exact_rank", "gcd_degree_barnett", "has_complex_root", "has_isolated_complex_root",
    "has_real_root", "has_spherical_root", "heights", "isolated_complex_roots",
    "max_complex_roots", "norm_sq", "parse_poly", "right_divide", "root_bounds",
    "solve_quadratic_complex_case", "spherical_classes", "split_complex", "sylvester_resultant",
]
