"""Independent brute-force checks for the closed-form constructions.

:func:`apex_by_rotation` rebuilds the equilateral apex from first
principles: the apex lies at the common edge distance from both endpoints,
so it is the image of one endpoint under a rotation about the other by the
equilateral vertex angle ``arccos(c / (1 + c))``.  No coefficient formula
from the construction module is used; agreement between the two routes is a
strong cross-check.

:func:`search_equilateral` enumerates all eight sign vectors, constructing
each Napoleonisation from rotation-based apexes and plain barycentres, and
reports every sign vector whose centroid triangle is equilateral within a
tolerance.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial.transform import Rotation

from .core import UnitVector, barycentre, dot
from .errors import NapsphereError
from .napoleon import SignVector, _check_edge
from .triangle import SphericalTriangle, new_triangle

__all__ = [
    "apex_by_rotation",
    "search_equilateral",
    "random_triangle",
    "random_triangles",
]


def apex_by_rotation(a, b, eps: int) -> UnitVector:
    """Equilateral apex on edge (a, b) built by rotating *b* about *a*.

    The rotation angle is the vertex angle of an equilateral spherical
    triangle with side arccos(<a,b>); its sign selects the side of a x b.
    Raises the same errors as the closed-form construction and degrades (with
    a conditioning warning) near the width boundary.
    """
    if eps not in (-1, +1):
        raise ValueError("eps must be -1 or +1")
    c = _check_edge(a, b)
    angle = math.acos(c / (1.0 + c))
    axis = np.asarray(a, dtype=float)
    return Rotation.from_rotvec(eps * angle * axis).apply(np.asarray(b, dtype=float))


def search_equilateral(t: SphericalTriangle, tol: float) -> list[tuple[SignVector, float]]:
    """All sign vectors whose Napoleonisation of *t* is equilateral within *tol*.

    Works entirely from rotation-based apexes and barycentres (never the
    closed-form centroid or inner-product formulas).  Signs are interpreted
    in the stored vertex order of *t*.  Returns (sign vector, residual)
    pairs sorted by residual; an empty list means no equilateral
    Napoleonisation exists at this tolerance.
    """
    v = t.vertices
    hits: list[tuple[SignVector, float]] = []
    for e0 in (-1, +1):
        for e1 in (-1, +1):
            for e2 in (-1, +1):
                s = SignVector(e0, e1, e2)
                rs = []
                for i, e in enumerate(s.as_tuple()):
                    a, b = v[(i + 1) % 3], v[(i + 2) % 3]
                    q = apex_by_rotation(a, b, e)
                    rs.append(barycentre(a, b, q))
                rr = [dot(rs[0], rs[1]), dot(rs[1], rs[2]), dot(rs[2], rs[0])]
                residual = max(abs(rr[0] - rr[1]), abs(rr[1] - rr[2]), abs(rr[2] - rr[0]))
                if residual < tol:
                    hits.append((s, residual))
    hits.sort(key=lambda pair: pair[1])
    return hits


def random_triangle(rng: np.random.Generator) -> SphericalTriangle:
    """One uniformly random valid triangle (rejection sampling).

    Vertices are independent uniform points of the sphere (normalised
    Gaussian triples); candidates violating the triangle invariants are
    rejected.  The result is rebuilt in its orientation-normalised vertex
    order, so ``orientation_swapped`` is always False.
    """
    while True:
        v = rng.normal(size=(3, 3))
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        try:
            t = new_triangle(v[0], v[1], v[2])
        except NapsphereError:
            continue
        if t.orientation_swapped:
            t = new_triangle(t.p0, t.p1, t.p2)
        return t


def random_triangles(count: int, seed: int) -> list[SphericalTriangle]:
    """Deterministic batch of valid random triangles for a given seed."""
    rng = np.random.default_rng(seed)
    return [random_triangle(rng) for _ in range(count)]
