"""The outward-Napoleonic quadric, its parametrization, and realization.

In rotated coordinates

    X = (d0 + d1 + d2)/sqrt(3),
    Y = (-2 d0 + d1 + d2)/sqrt(6),
    Z = (-d1 + d2)/sqrt(2),

the locus d0^2+d1^2+d2^2+d0d1+d0d2+d1d2 = 2 becomes the ellipsoid of
revolution 2 X^2 + Y^2/2 + Z^2/2 = 2 with semi-axes (1, 2, 2).  The module
samples admissible side parameters from this surface and realizes any
realizable side parameters as a canonical triangle on the unit sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import cross
from .errors import SeedExhaustedError, UnrealizableError
from .triangle import SQRT3, SideParameters, SphericalTriangle, chi_squared, new_triangle

__all__ = [
    "EllipsoidPoint",
    "BasisCoefficients",
    "ROTATION",
    "d_to_xyz",
    "xyz_to_d",
    "quadratic_form",
    "sample_napoleonic_d",
    "sample_napoleonic_d_with_attempts",
    "third_vertex_coefficients",
    "realize",
]

# Orthogonal rotation taking (d0, d1, d2) to (X, Y, Z); rows are orthonormal,
# so the inverse is the transpose.
ROTATION = np.array(
    [
        [1.0 / math.sqrt(3.0), 1.0 / math.sqrt(3.0), 1.0 / math.sqrt(3.0)],
        [-2.0 / math.sqrt(6.0), 1.0 / math.sqrt(6.0), 1.0 / math.sqrt(6.0)],
        [0.0, -1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0)],
    ]
)

# Diagonal-line exclusion margin for sampling: points within this Euclidean
# distance of {d0 = d1 = d2} are rejected as effectively equilateral.
DIAGONAL_MARGIN = 1e-6

_MAX_REJECTIONS = 10**6


@dataclass(frozen=True)
class EllipsoidPoint:
    """Rotated coordinates of side parameters.

    Points returned by :func:`sample_napoleonic_d`'s parametrization satisfy
    ``2 X^2 + Y^2/2 + Z^2/2 = 2``; the forward map :func:`d_to_xyz` accepts
    arbitrary side parameters, so use :meth:`quadric_value` to test surface
    membership.
    """

    x: float
    y: float
    z: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def quadric_value(self) -> float:
        return 2.0 * self.x * self.x + self.y * self.y / 2.0 + self.z * self.z / 2.0


@dataclass(frozen=True)
class BasisCoefficients:
    """Coefficients of a unit vector in the frame {P0, P1, P0 x P1}.

    For unit P0, P1 with c = <P0, P1>, any unit vector a0 P0 + a1 P1 +
    b (P0 x P1) satisfies a0^2 + a1^2 + 2 a0 a1 c + b^2 (1 - c^2) = 1.
    """

    a0: float
    a1: float
    b: float

    def norm_identity_residual(self, c: float) -> float:
        """Deviation of the frame norm identity from 1 at edge inner product *c*."""
        return self.a0**2 + self.a1**2 + 2.0 * self.a0 * self.a1 * c + self.b**2 * (1.0 - c * c) - 1.0


def d_to_xyz(d: SideParameters) -> EllipsoidPoint:
    """Rotate side parameters into the ellipsoid's principal-axis frame."""
    xyz = ROTATION @ d.as_array()
    return EllipsoidPoint(*map(float, xyz))


def xyz_to_d(p: EllipsoidPoint) -> SideParameters:
    """Invert the rotation; raises :class:`OutOfRangeError` when some d_i
    falls outside (0, sqrt(3))."""
    d = ROTATION.T @ np.array(p.as_tuple())
    return SideParameters(*map(float, d))


def quadratic_form(d: SideParameters) -> float:
    """2 X^2 + Y^2/2 + Z^2/2 evaluated through the rotation.

    Identical, as a polynomial in d, to the condition value
    d0^2+d1^2+d2^2+d0d1+d0d2+d1d2.
    """
    return d_to_xyz(d).quadric_value()


def _distance_to_diagonal(d: np.ndarray) -> float:
    m = float(d.mean())
    return float(np.linalg.norm(d - m))


def sample_napoleonic_d(count: int, seed: int) -> list[SideParameters]:
    """Sample admissible non-equilateral points of the Napoleonic quadric.

    The ellipsoid is parametrized by two angles drawn uniformly; each point
    is rotated back to side parameters and rejected unless all d_i lie in
    (0, sqrt(3)), the point is at least ``DIAGONAL_MARGIN`` from the
    equilateral diagonal, and ``chi_squared(d) > 1e-12`` (realizable).
    Deterministic per seed.
    """
    samples, _ = sample_napoleonic_d_with_attempts(count, seed)
    return samples


def sample_napoleonic_d_with_attempts(count: int, seed: int) -> tuple[list[SideParameters], int]:
    """Like :func:`sample_napoleonic_d`, also returning the number of draws.

    The attempt count exposes the empirical rejection rate of the admissible
    region (which portion of the quadric is admissible is not asserted
    anywhere, only measured).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    out: list[SideParameters] = []
    attempts = 0
    rejections = 0
    while len(out) < count:
        attempts += 1
        theta = rng.uniform(0.0, math.pi)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        p = EllipsoidPoint(
            math.cos(theta),
            2.0 * math.sin(theta) * math.cos(phi),
            2.0 * math.sin(theta) * math.sin(phi),
        )
        d = ROTATION.T @ np.array(p.as_tuple())
        if (
            np.all(d > 0.0)
            and np.all(d < SQRT3)
            and _distance_to_diagonal(d) >= DIAGONAL_MARGIN
        ):
            sp = SideParameters(*map(float, d))
            if chi_squared(sp) > 1e-12:
                out.append(sp)
                rejections = 0
                continue
        rejections += 1
        if rejections >= _MAX_REJECTIONS:
            raise SeedExhaustedError(f"{_MAX_REJECTIONS} consecutive rejections; sampler stuck")
    return out, attempts


def third_vertex_coefficients(d: SideParameters) -> BasisCoefficients:
    """Coefficients of the canonical third vertex in the {P0, P1, P0 x P1} frame.

    With c_i = (d_i^2 - 1)/2 the prescribed inner products, the third vertex
    of the canonical realization is a0 P0 + a1 P1 + b (P0 x P1) where b > 0
    enforces positive orientation.  Raises :class:`UnrealizableError` when
    ``chi_squared(d)`` is not positive.
    """
    c0, c1, c2 = d.edge_inners()
    chi2 = 1.0 - c0 * c0 - c1 * c1 - c2 * c2 + 2.0 * c0 * c1 * c2
    if chi2 <= 1e-12:
        raise UnrealizableError(f"side parameters admit no triangle: squared triple {chi2!r} <= 0")
    denom = 1.0 - c2 * c2
    return BasisCoefficients(
        a0=(c1 - c2 * c0) / denom,
        a1=(c0 - c2 * c1) / denom,
        b=math.sqrt(chi2) / denom,
    )


def realize(d: SideParameters) -> SphericalTriangle:
    """Canonical triangle on the unit sphere with side parameters *d*.

    P0 = (1,0,0), P1 lies in the upper xy half-plane, and the third vertex
    is placed with positive orientation, so the result needs no vertex swap
    and represents the congruence class of *d*.  Raises
    :class:`UnrealizableError` when ``chi_squared(d) <= 1e-12`` and
    :class:`OutOfRangeError` for side parameters outside (0, sqrt(3)).
    """
    _, _, c2 = d.edge_inners()
    coeff = third_vertex_coefficients(d)
    p0 = np.array([1.0, 0.0, 0.0])
    p1 = np.array([c2, math.sqrt(1.0 - c2 * c2), 0.0])
    p2 = coeff.a0 * p0 + coeff.a1 * p1 + coeff.b * cross(p0, p1)
    p2 = p2 / float(np.linalg.norm(p2))
    # b > 0 makes the raw triple product positive, so no swap occurs here.
    return new_triangle(p0, p1, p2)
