"""Elementary 3-vector and unit-sphere primitives.

All functions are pure and operate on length-3 ``numpy`` arrays (or anything
convertible).  Points of the unit sphere are plain arrays validated once by
:func:`unit_vector`; no per-operation re-normalisation is performed.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DegenerateError, ZeroSumError

__all__ = [
    "UNIT_NORM_TOL",
    "Vector3",
    "UnitVector",
    "vector3",
    "unit_vector",
    "norm",
    "normalize",
    "dot",
    "cross",
    "triple",
    "clamp",
    "spherical_distance",
    "barycentre",
]

# |x^2+y^2+z^2 - 1| allowed on construction of a unit vector.
UNIT_NORM_TOL = 1e-9

Vector3 = np.ndarray
UnitVector = np.ndarray


def vector3(v) -> Vector3:
    """Coerce *v* to a float array of shape (3,), requiring finite entries."""
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("vector components must be finite")
    return a


def unit_vector(v) -> UnitVector:
    """Validate *v* as a point of the unit sphere and re-normalise it once.

    Raises ``ValueError`` when the squared norm deviates from 1 by more than
    ``UNIT_NORM_TOL``.  Callers that accept unnormalised input (e.g. the CLI)
    should call :func:`normalize` first.
    """
    a = vector3(v)
    nsq = float(a @ a)
    if abs(nsq - 1.0) > UNIT_NORM_TOL:
        raise ValueError(f"not a unit vector: |v|^2 = {nsq!r}")
    return a / math.sqrt(nsq)


def norm(v) -> float:
    """Euclidean length of *v*."""
    a = np.asarray(v, dtype=float)
    return float(np.linalg.norm(a))


def normalize(v) -> UnitVector:
    """Unit vector in the direction of *v*.

    Raises :class:`DegenerateError` when the norm is below 1e-12.
    """
    a = vector3(v)
    n = float(np.linalg.norm(a))
    if n < 1e-12:
        raise DegenerateError("cannot normalise a (near-)zero vector")
    return a / n


def dot(a, b) -> float:
    """Euclidean inner product of two 3-vectors."""
    return float(np.asarray(a, dtype=float) @ np.asarray(b, dtype=float))


def cross(a, b) -> Vector3:
    """Right-handed cross product of two 3-vectors."""
    return np.cross(np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def triple(a, b, c) -> float:
    """Scalar triple product <a, b x c>; invariant under cyclic permutation."""
    return dot(a, cross(b, c))


def clamp(x: float, lo: float = -1.0, hi: float = 1.0) -> float:
    """Clamp *x* to [lo, hi]; guards arccos against rounding past +-1."""
    return lo if x < lo else hi if x > hi else x


def spherical_distance(p, q) -> float:
    """Great-circle distance in [0, pi] between two unit vectors."""
    return math.acos(clamp(dot(p, q)))


def barycentre(p0, p1, p2) -> UnitVector:
    """Normalised vertex sum (spherical centroid direction) of three points.

    Raises :class:`ZeroSumError` when the vertex sum is too small to
    determine a direction (e.g. three equally spaced cogeodesic points).
    """
    s = np.asarray(p0, dtype=float) + np.asarray(p1, dtype=float) + np.asarray(p2, dtype=float)
    n = float(np.linalg.norm(s))
    if n < 1e-9:
        raise ZeroSumError("vertex sum is (near-)zero; barycentre undefined")
    return s / n
