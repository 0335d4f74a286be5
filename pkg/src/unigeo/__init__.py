"""Exact rational trigonometry, affine and projective, over Q and F_p."""

__version__ = "0.1.0"

from .affine import (
    AffineTriangle,
    TriangleCenters,
    TriangleMeasure,
    law_residuals,
    measure_points,
    quadrance,
    spread,
    triangle_centers,
    triangle_measure,
)
from .bilinear import QForm, gram_determinant, perp_residue, planes_perpendicular, project_onto_line
from .errors import GeometryError, SceneError
from .fields import GF, QQ, REALS, FieldDescriptor, Residue, make_field
from .hyperbolic import DiskPoint, crosscheck, hyp_angles, hyp_distance, poincare_map
from .projective import (
    LineCoords3,
    ProjLine,
    ProjPoint,
    format_point,
    join,
    line_coords_3d,
    meet_3d,
    proj_orthocenter,
    proj_quadrance,
    proj_spread,
    proj_triangle_measure,
    projective_law_residuals,
    vertex_bisectors,
)
from .solvers import equilateral_solve, isosceles_derive, lambert_solve, napier_solve, right_hexagon_check
from .spreadpoly import IntPolynomial, spread_cyclotomic, spread_poly

__all__ = [
    "AffineTriangle",
    "DiskPoint",
    "FieldDescriptor",
    "GF",
    "GeometryError",
    "IntPolynomial",
    "LineCoords3",
    "ProjLine",
    "ProjPoint",
    "QForm",
    "QQ",
    "REALS",
    "Residue",
    "SceneError",
    "TriangleCenters",
    "TriangleMeasure",
    "crosscheck",
    "equilateral_solve",
    "format_point",
    "gram_determinant",
    "hyp_angles",
    "hyp_distance",
    "isosceles_derive",
    "join",
    "lambert_solve",
    "law_residuals",
    "line_coords_3d",
    "make_field",
    "measure_points",
    "meet_3d",
    "napier_solve",
    "perp_residue",
    "planes_perpendicular",
    "poincare_map",
    "proj_orthocenter",
    "proj_quadrance",
    "proj_spread",
    "proj_triangle_measure",
    "project_onto_line",
    "projective_law_residuals",
    "quadrance",
    "right_hexagon_check",
    "spread",
    "spread_cyclotomic",
    "spread_poly",
    "triangle_centers",
    "triangle_measure",
    "vertex_bisectors",
]
