"""Univariate polynomials over a FieldSpec, backed by sympy.

Polynomials travel as coefficient lists, leading coefficient first.
"""

import logging
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from sympy import GF, QQ, Poly, Symbol

from core.exceptions import RationalsFactorLimit
from .field import FieldSpec


logger = logging.getLogger(__name__)

_X = Symbol("x")

Coefficients = List[Any]


def to_poly(fld: FieldSpec, coeffs: Sequence[Any]) -> Poly:
    if fld.is_rational:
        return Poly([QQ(c.numerator, c.denominator) if hasattr(c, "denominator") else QQ(c) for c in coeffs], _X, domain=QQ)
    return Poly([int(c) for c in coeffs], _X, domain=GF(fld.characteristic))


def from_poly(fld: FieldSpec, poly: Poly) -> Coefficients:
    if fld.is_rational:
        return [fld.scalar(_rational(c)) for c in poly.all_coeffs()]
    return [fld.scalar(int(c)) for c in poly.all_coeffs()]


def _rational(c: Any) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator)) if hasattr(c, "numerator") else Fraction(c)


def factor_polynomial(fld: FieldSpec, coeffs: Sequence[Any]) -> List[Tuple[Coefficients, int]]:
    """Monic irreducible factors with multiplicities.

    Over the rationals only factors of degree <= 2 are accepted; anything
    larger raises RationalsFactorLimit so the caller can move to a prime.
    """
    poly = to_poly(fld, coeffs)
    if poly.is_zero:
        raise ValueError("Cannot factor the zero polynomial")
    _, factors = poly.factor_list()
    result: List[Tuple[Coefficients, int]] = []
    for factor, mult in factors:
        factor = factor.monic()
        if fld.is_rational and factor.degree() > 2:
            raise RationalsFactorLimit(
                f"Irreducible rational factor of degree {factor.degree()}; use a prime field"
            )
        result.append((from_poly(fld, factor), int(mult)))
    result.sort(key=lambda item: (len(item[0]), [str(c) for c in item[0]]))
    logger.debug(f"Factored degree {poly.degree()} polynomial into {len(result)} factors")
    return result


def orthogonal_idempotent_polynomials(
    fld: FieldSpec, factors: Sequence[Tuple[Coefficients, int]]
) -> List[Coefficients]:
    """Polynomials e_i with e_i = 1 mod f_i^{m_i} and e_i = 0 mod the other prime powers."""
    powers = [to_poly(fld, f) ** m for f, m in factors]
    total = Poly(1, _X, domain=powers[0].domain) if powers else None
    for p in powers:
        total = total * p
    result: List[Coefficients] = []
    for p in powers:
        rest = total.exquo(p)
        s, t, h = p.gcdex(rest)
        # s*p + t*rest = h, h is a unit since the factors are coprime
        e = (t * rest).quo_ground(h.LC()).rem(total)
        result.append(from_poly(fld, e))
    return result
