"""Exact verification of the polynomial identities behind the classification.

Works entirely over the rationals: polynomials in the three side parameters
are stored sparsely as ``{(i, j, k): Fraction}`` maps for the monomials
d0^i d1^j d2^k.  Nothing in this module touches floating point, so a
``True`` from the ``verify_*`` functions is a coefficient-by-coefficient
proof of the identity.

The quantity chi (the triangle's triple product) enters these identities
only through its square, which is a polynomial in d; the one identity that
involves bare chi is verified after substituting the relation
2 chi = d0 + d1 + d2 - d0 d1 d2 that holds on the Napoleonic quadric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "RationalPolynomial",
    "D0",
    "D1",
    "D2",
    "ONE",
    "alpha_polynomial",
    "chi_squared_polynomial",
    "locus_chi_polynomial",
    "condition_polynomial",
    "equilateral_factor_polynomial",
    "gamma_polynomial",
    "IdentityCheck",
    "verify_factorisation",
    "verify_sum_of_squares",
    "verify_final_identity",
    "verify_rotation_quadratic",
    "verify_all",
]

Exponents = tuple[int, int, int]
Scalar = Union[int, Fraction]


class RationalPolynomial:
    """Sparse multivariate polynomial in d0, d1, d2 with Fraction coefficients.

    Immutable in practice: all arithmetic returns new instances, zero
    coefficients are never stored, and coefficients are canonical reduced
    fractions (``fractions.Fraction`` guarantees this).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Exponents, Scalar] | None = None):
        cleaned: dict[Exponents, Fraction] = {}
        if coeffs:
            for exps, c in coeffs.items():
                q = Fraction(c)
                if q != 0:
                    cleaned[tuple(int(e) for e in exps)] = q
        self.coeffs = cleaned

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "RationalPolynomial":
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def variable(cls, index: int) -> "RationalPolynomial":
        exps = [0, 0, 0]
        exps[index] = 1
        return cls({tuple(exps): Fraction(1)})

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return RationalPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPolynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c: Scalar) -> "RationalPolynomial":
        q = Fraction(c)
        return RationalPolynomial({e: q * v for e, v in self.coeffs.items()})

    # -- queries ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=0)

    def evaluate(self, d: Iterable) -> "Fraction | float":
        """Evaluate at a point; exact when given Fractions/ints."""
        d0, d1, d2 = d
        total = None
        for (i, j, k), c in self.coeffs.items():
            term = c * d0**i * d1**j * d2**k
            total = term if total is None else total + term
        if total is None:
            return Fraction(0) if isinstance(d0, (int, Fraction)) else 0.0
        return total

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for exps in sorted(self.coeffs, key=lambda e: (sum(e), e), reverse=True):
            c = self.coeffs[exps]
            mono = " ".join(f"d{i}^{e}" if e > 1 else f"d{i}" for i, e in enumerate(exps) if e)
            parts.append(f"{c}" + (f" {mono}" if mono else ""))
        return " + ".join(parts)


D0 = RationalPolynomial.variable(0)
D1 = RationalPolynomial.variable(1)
D2 = RationalPolynomial.variable(2)
ONE = RationalPolynomial.constant(1)

_HALF = Fraction(1, 2)


def _sum_squares() -> RationalPolynomial:
    return D0 * D0 + D1 * D1 + D2 * D2


def _sum_products() -> RationalPolynomial:
    return D0 * D1 + D1 * D2 + D2 * D0


def alpha_polynomial() -> RationalPolynomial:
    """(d0^2 + d1^2 + d2^2 - 1) / 2."""
    return (_sum_squares() - 1).scale(_HALF)


def chi_squared_polynomial() -> RationalPolynomial:
    """Squared triple product as a polynomial in the side parameters.

    chi^2 = [2(1 - a)(1 + 2a) + d0^2 d1^2 + d1^2 d2^2 + d2^2 d0^2
             + d0^2 d1^2 d2^2] / 4  with a the alpha polynomial.
    """
    a = alpha_polynomial()
    sq = [D0 * D0, D1 * D1, D2 * D2]
    quartic = sq[0] * sq[1] + sq[1] * sq[2] + sq[2] * sq[0]
    sextic = sq[0] * sq[1] * sq[2]
    four_chi_sq = ((ONE - a) * (ONE + a.scale(2))).scale(2) + quartic + sextic
    return four_chi_sq.scale(Fraction(1, 4))


def locus_chi_polynomial() -> RationalPolynomial:
    """(d0 + d1 + d2 - d0 d1 d2) / 2: equals chi on the Napoleonic quadric."""
    return (D0 + D1 + D2 - D0 * D1 * D2).scale(_HALF)


def condition_polynomial() -> RationalPolynomial:
    """d0^2 + d1^2 + d2^2 + d0 d1 + d1 d2 + d2 d0."""
    return _sum_squares() + _sum_products()


def equilateral_factor_polynomial() -> RationalPolynomial:
    """d0^2 + d1^2 + d2^2 - d0 d1 - d1 d2 - d2 d0."""
    return _sum_squares() - _sum_products()


def gamma_polynomial() -> RationalPolynomial:
    """3 (d0^2 + 1)(d1^2 + 1)(d2^2 + 1)."""
    return ((D0 * D0 + 1) * (D1 * D1 + 1) * (D2 * D2 + 1)).scale(3)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one exact identity check.

    Truthy iff the identity holds; on failure ``difference`` is the exact
    nonzero polynomial left-hand-side minus right-hand-side.
    """

    name: str
    holds: bool
    difference: RationalPolynomial

    def __bool__(self) -> bool:
        return self.holds


def _check(name: str, lhs: RationalPolynomial, rhs: RationalPolynomial) -> IdentityCheck:
    diff = lhs - rhs
    return IdentityCheck(name=name, holds=diff.is_zero(), difference=diff)


def verify_factorisation(
    chi_sq: RationalPolynomial | None = None,
) -> IdentityCheck:
    """alpha^2 (sum d - prod d)^2 - chi^2 (1 - sum dd)^2 factorises as
    (gamma/12) (equilateral factor) (condition - 2).

    *chi_sq* defaults to the derived chi^2 polynomial; passing a perturbed
    polynomial is useful for mutation testing.
    """
    a = alpha_polynomial()
    if chi_sq is None:
        chi_sq = chi_squared_polynomial()
    sum_minus_prod = D0 + D1 + D2 - D0 * D1 * D2
    one_minus_dd = ONE - _sum_products()
    lhs = a * a * sum_minus_prod * sum_minus_prod - chi_sq * one_minus_dd * one_minus_dd
    rhs = gamma_polynomial().scale(Fraction(1, 12)) * equilateral_factor_polynomial() * (
        condition_polynomial() - 2
    )
    return _check("product-of-residuals factorisation", lhs, rhs)


def verify_sum_of_squares() -> IdentityCheck:
    """(d0 + d1/2 + d2/2)^2 + (3/4)(d1 + d2/3)^2 + (2/3) d2^2 equals
    d0^2 + d1^2 + d2^2 + d0 d1 + d1 d2 + d2 d0."""
    t1 = D0 + D1.scale(_HALF) + D2.scale(_HALF)
    t2 = D1 + D2.scale(Fraction(1, 3))
    lhs = t1 * t1 + (t2 * t2).scale(Fraction(3, 4)) + (D2 * D2).scale(Fraction(2, 3))
    return _check("positive-definite form of the condition", lhs, condition_polynomial())


def verify_final_identity(i: int = 0) -> IdentityCheck:
    """Centroid inner-product bracket at index *i* reduces to a multiple of
    the condition residual.

    With alpha and (via the quadric relation) chi substituted as polynomials,

        (d_{i+2}^2+1)(d_i^2+1) + 4 (alpha d_{i+2} d_i - chi (d_{i+2}+d_i))
        + (d_{i+2}^2-1)(d_i^2-1) - 2 (d_{i+1}^2-1)
        = 2 (d_{i+2} d_i - 1)(condition - 2),

    which forces every centroid inner product to -1/3 on the quadric.
    """
    a = alpha_polynomial()
    chi = locus_chi_polynomial()
    dv = [D0, D1, D2]
    di = dv[i % 3]
    dmid = dv[(i + 1) % 3]
    dip2 = dv[(i + 2) % 3]
    lhs = (
        (dip2 * dip2 + 1) * (di * di + 1)
        + (a * dip2 * di - chi * (dip2 + di)).scale(4)
        + (dip2 * dip2 - 1) * (di * di - 1)
        - (dmid * dmid - 1).scale(2)
    )
    rhs = ((dip2 * di - 1) * (condition_polynomial() - 2)).scale(2)
    return _check(f"quadric centroid inner-product identity (i={i})", lhs, rhs)


def verify_rotation_quadratic() -> IdentityCheck:
    """2 X^2 + Y^2/2 + Z^2/2, expanded through the rotation, equals the
    condition polynomial.

    The rotated coordinates have irrational components but their squares are
    rational: 2 X^2 = 2 (d0+d1+d2)^2 / 3, Y^2/2 = (-2 d0+d1+d2)^2 / 12,
    Z^2/2 = (d2-d1)^2 / 4.
    """
    s = D0 + D1 + D2
    y = D1 + D2 - D0.scale(2)
    z = D2 - D1
    lhs = (s * s).scale(Fraction(2, 3)) + (y * y).scale(Fraction(1, 12)) + (z * z).scale(Fraction(1, 4))
    return _check("rotated-frame quadric identity", lhs, condition_polynomial())


def verify_all() -> list[IdentityCheck]:
    """Run every exact identity check (final identity at all three indices)."""
    checks = [
        verify_factorisation(),
        verify_sum_of_squares(),
        verify_final_identity(0),
        verify_final_identity(1),
        verify_final_identity(2),
        verify_rotation_quadratic(),
    ]
    return checks
