"""Napoleonisations of spherical triangles.

Construct equilateral-triangle apexes and centroids on the edges of a
spherical triangle, classify which triangles admit an equilateral outward
Napoleonisation (a quadric condition on the side parameters), sample that
quadric, and verify the underlying polynomial identities in exact rational
arithmetic.
"""

from .classify import (
    CLASSIFY_TOL,
    ClassificationReport,
    Verdict,
    chi_relation_check,
    classify,
    classify_d,
    condition_residual,
    condition_value,
    epsilon_from_d,
    equilateral_factor,
    napoleonic_equation_residual,
)
from .core import (
    barycentre,
    cross,
    dot,
    norm,
    normalize,
    spherical_distance,
    triple,
    unit_vector,
)
from .ellipsoid import (
    BasisCoefficients,
    EllipsoidPoint,
    d_to_xyz,
    quadratic_form,
    realize,
    sample_napoleonic_d,
    sample_napoleonic_d_with_attempts,
    third_vertex_coefficients,
    xyz_to_d,
)
from .errors import (
    BoundaryConditioningWarning,
    CogeodesicError,
    DegenerateError,
    IndeterminateError,
    NapsphereError,
    OutOfRangeError,
    SeedExhaustedError,
    TooWideError,
    UnrealizableError,
    ZeroSumError,
)
from .napoleon import (
    INWARD,
    OUTWARD,
    NapoleonisationResult,
    SignVector,
    apex,
    centroid_inner_closed_form,
    edge_centroid,
    napoleonise,
)
from .oracle import apex_by_rotation, random_triangle, random_triangles, search_equilateral
from .triangle import (
    SideParameters,
    SphericalTriangle,
    alpha,
    chi_squared,
    new_triangle,
    side_parameters,
)

__version__ = "0.1.0"

__all__ = [
    "CLASSIFY_TOL",
    "ClassificationReport",
    "Verdict",
    "chi_relation_check",
    "classify",
    "classify_d",
    "condition_residual",
    "condition_value",
    "epsilon_from_d",
    "equilateral_factor",
    "napoleonic_equation_residual",
    "barycentre",
    "cross",
    "dot",
    "norm",
    "normalize",
    "spherical_distance",
    "triple",
    "unit_vector",
    "BasisCoefficients",
    "EllipsoidPoint",
    "d_to_xyz",
    "quadratic_form",
    "realize",
    "sample_napoleonic_d",
    "sample_napoleonic_d_with_attempts",
    "third_vertex_coefficients",
    "xyz_to_d",
    "BoundaryConditioningWarning",
    "CogeodesicError",
    "DegenerateError",
    "IndeterminateError",
    "NapsphereError",
    "OutOfRangeError",
    "SeedExhaustedError",
    "TooWideError",
    "UnrealizableError",
    "ZeroSumError",
    "INWARD",
    "OUTWARD",
    "NapoleonisationResult",
    "SignVector",
    "apex",
    "centroid_inner_closed_form",
    "edge_centroid",
    "napoleonise",
    "apex_by_rotation",
    "random_triangle",
    "random_triangles",
    "search_equilateral",
    "SideParameters",
    "SphericalTriangle",
    "alpha",
    "chi_squared",
    "new_triangle",
    "side_parameters",
]
