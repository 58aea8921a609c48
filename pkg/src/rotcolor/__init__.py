"""Rotation-quandle colorings of knots, Alexander polynomials and PL trochoids."""

from .laurent import LaurentPoly
from .diagram import Crossing, Diagram, parse_pd, torus_diagram, arc_index
from .alexander import (
    fox_matrix,
    alexander_polynomial,
    ith_alexander,
    alexander_tower,
    elementary_divisors,
    torus_alexander_closed_form,
)
from .coloring import (
    Rotation,
    Coloring,
    ColoringSpace,
    quandle_op,
    quandle_op_inv,
    check_coloring,
    build_X_theta,
    numerical_rank,
    coloring_space,
    unit_circle_roots,
    is_colorable,
    normalize_coloring,
)
from .trochoid import (
    star_polygon_vertices,
    theta,
    trochoid_trace,
    trochoid_coloring,
    verify_factorization,
)

__version__ = "0.1.0"
