"""Orlicz Minkowski sums of convex bodies and their successive radii."""

from .bodies import (ContainsResult, ConvexBody, GeometryError, Subspace, contains,
                     convex_hull_union, direction_grid, hull_reduce,
                     make_ball_in_subspace, make_cube, make_random_polytope,
                     make_segment, make_simplex_Kn, make_slab_body, minkowski_sum,
                     project, reflect, section, support)
from .grassmann import (RadiiReport, SearchBudget, sample_subspace,
                        successive_inner_radius, successive_outer_radius,
                        successive_radii_profile)
from .io import ParseError, read_body, write_body
from .orlicz import (OrliczSumBody, boundary_cloud, boundary_polyline_2d,
                     orlicz_ball, orlicz_norm, orlicz_sum, orlicz_support)
from .phi import (OrliczFunction, PhiConstants, PhiParseError, PhiValidationError,
                  make_orlicz_function, make_poly_phi, make_power_phi,
                  parse_phi_descriptor, phi_inverse, validate)
from .radii import (BallCertificate, circumradius, diameter,
                    inradius_fixed_subspace, min_enclosing_ball, width)
from .verify import (SuiteConfig, SuiteReport, VerificationResult,
                     check_difference_body, check_inclusions, check_inner_theorem,
                     check_no_reverse, check_outer_theorem, default_phi_set,
                     run_suite)

__version__ = "0.1.0"

__all__ = [
    "BallCertificate", "ContainsResult", "ConvexBody", "GeometryError",
    "OrliczFunction", "OrliczSumBody", "ParseError", "PhiConstants",
    "PhiParseError", "PhiValidationError", "RadiiReport", "SearchBudget",
    "SuiteConfig", "SuiteReport", "Subspace", "VerificationResult",
    "boundary_cloud", "boundary_polyline_2d", "check_difference_body",
    "check_inclusions", "check_inner_theorem", "check_no_reverse",
    "check_outer_theorem", "circumradius", "contains", "convex_hull_union",
    "default_phi_set", "diameter", "direction_grid", "hull_reduce",
    "inradius_fixed_subspace", "make_ball_in_subspace", "make_cube",
    "make_orlicz_function", "make_poly_phi", "make_power_phi",
    "make_random_polytope", "make_segment", "make_simplex_Kn", "make_slab_body",
    "min_enclosing_ball", "minkowski_sum", "orlicz_ball", "orlicz_norm",
    "orlicz_sum", "orlicz_support", "parse_phi_descriptor", "phi_inverse",
    "project", "read_body", "reflect", "run_suite", "sample_subspace",
    "section", "successive_inner_radius", "successive_outer_radius",
    "successive_radii_profile", "support", "validate", "width", "write_body",
]
