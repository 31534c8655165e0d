"""Validated spherical triangles and their side parameters.

A triangle is admissible when its vertices are pairwise distinct and
non-antipodal, every edge satisfies the strict width bound
``<p_i, p_j> > -1/2`` (so equilateral triangles with well-defined interiors
can be erected on each edge), and the vertices are not cogeodesic.  The
constructor normalises orientation: if the scalar triple product of the
vertices is negative, the second and third vertices are swapped (recorded in
``orientation_swapped``) so that the stored ``chi`` is always positive.

Each edge is encoded by a side parameter ``d_i = sqrt(1 + 2<p_{i+1}, p_{i+2}>)``
in (0, sqrt(3)), a monotone function of the length of the edge opposite
vertex ``i``.  The quantities ``alpha`` and ``chi_squared`` derived from the
side parameters reproduce ``1 + <p0,p1> + <p1,p2> + <p2,p0>`` and the squared
triple product of the vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import UnitVector, dot, triple, unit_vector
from .errors import CogeodesicError, DegenerateError, OutOfRangeError, TooWideError

__all__ = [
    "DEGENERACY_TOL",
    "SQRT3",
    "SphericalTriangle",
    "SideParameters",
    "new_triangle",
    "side_parameters",
    "alpha",
    "chi_squared",
]

# Tolerance for distinctness / antipodality / cogeodesy checks, matching the
# unit-norm tolerance scale of core.unit_vector.
DEGENERACY_TOL = 1e-9

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True, eq=False)
class SphericalTriangle:
    """Admissible, orientation-normalised vertex triple on the unit sphere.

    ``chi`` is the (positive) scalar triple product of the stored vertices.
    ``orientation_swapped`` records whether ``p1`` and ``p2`` were exchanged
    relative to the constructor input; callers can use it to map indices (and
    apex directions) back to their original labelling.
    """

    p0: UnitVector
    p1: UnitVector
    p2: UnitVector
    chi: float
    orientation_swapped: bool = False

    @property
    def vertices(self) -> tuple[UnitVector, UnitVector, UnitVector]:
        return (self.p0, self.p1, self.p2)

    def edge_inner(self, i: int) -> float:
        """Inner product of the edge opposite vertex *i*."""
        v = self.vertices
        return dot(v[(i + 1) % 3], v[(i + 2) % 3])


@dataclass(frozen=True)
class SideParameters:
    """Edge encoding d_i = sqrt(1 + 2<p_{i+1}, p_{i+2}>), each in (0, sqrt(3))."""

    d0: float
    d1: float
    d2: float

    def __post_init__(self):
        for name in ("d0", "d1", "d2"):
            v = getattr(self, name)
            if not (0.0 < v < SQRT3):
                raise OutOfRangeError(f"{name} = {v!r} outside the open interval (0, sqrt(3))")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.d0, self.d1, self.d2)

    def as_array(self) -> np.ndarray:
        return np.array([self.d0, self.d1, self.d2])

    def edge_inners(self) -> tuple[float, float, float]:
        """Vertex inner products (<p1,p2>, <p2,p0>, <p0,p1>) this d encodes."""
        return tuple((v * v - 1.0) / 2.0 for v in self.as_tuple())


def new_triangle(p0, p1, p2) -> SphericalTriangle:
    """Validate three unit vectors as a spherical triangle.

    Raises :class:`DegenerateError` for coincident or antipodal vertices,
    :class:`CogeodesicError` when the triple product vanishes within
    tolerance, and :class:`TooWideError` when some edge has inner product
    <= -1/2.  If the raw triple product is negative, ``p1`` and ``p2`` are
    swapped so the stored orientation has positive triple product.
    """
    v = [unit_vector(p0), unit_vector(p1), unit_vector(p2)]

    for i in range(3):
        a, b = v[i], v[(i + 1) % 3]
        if float(np.linalg.norm(a - b)) <= DEGENERACY_TOL:
            raise DegenerateError(f"vertices {i} and {(i + 1) % 3} coincide")
        if float(np.linalg.norm(a + b)) <= DEGENERACY_TOL:
            raise DegenerateError(f"vertices {i} and {(i + 1) % 3} are antipodal")

    t = triple(v[0], v[1], v[2])
    if abs(t) <= DEGENERACY_TOL:
        raise CogeodesicError("vertices lie on a common great circle")

    for i in range(3):
        c = dot(v[(i + 1) % 3], v[(i + 2) % 3])
        if c <= -0.5:
            raise TooWideError(f"edge opposite vertex {i} has inner product {c!r} <= -1/2")

    swapped = t < 0.0
    if swapped:
        v[1], v[2] = v[2], v[1]
        t = -t
    return SphericalTriangle(v[0], v[1], v[2], chi=t, orientation_swapped=swapped)


def side_parameters(t: SphericalTriangle) -> SideParameters:
    """Side parameters of a validated triangle; each is guaranteed in range."""
    return SideParameters(*(math.sqrt(1.0 + 2.0 * t.edge_inner(i)) for i in range(3)))


def alpha(d: SideParameters) -> float:
    """(d0^2 + d1^2 + d2^2 - 1) / 2, i.e. 1 + the sum of edge inner products."""
    d0, d1, d2 = d.as_tuple()
    return (d0 * d0 + d1 * d1 + d2 * d2 - 1.0) / 2.0


def chi_squared(d: SideParameters) -> float:
    """Squared triple product of any triangle realising *d*.

    Computed from side parameters alone:
    ``[2(1-a)(1+2a) + d0^2 d1^2 + d1^2 d2^2 + d2^2 d0^2 + d0^2 d1^2 d2^2] / 4``
    with ``a = alpha(d)``.  May be negative, in which case *d* is not
    realizable by any spherical triangle.
    """
    d0s, d1s, d2s = (v * v for v in d.as_tuple())
    a = alpha(d)
    return (2.0 * (1.0 - a) * (1.0 + 2.0 * a) + d0s * d1s + d1s * d2s + d2s * d0s + d0s * d1s * d2s) / 4.0
