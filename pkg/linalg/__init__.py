"""Exact linear algebra over the rationals and prime fields."""

from .field import DEFAULT_PRIME, MAX_PRIME, FieldSpec, stack_rows
from .polynomial import factor_polynomial, orthogonal_idempotent_polynomials
from .subspace import Subspace, subspace_intersect

__all__ = [
    "DEFAULT_PRIME",
    "MAX_PRIME",
    "FieldSpec",
    "Subspace",
    "factor_polynomial",
    "orthogonal_idempotent_polynomials",
    "stack_rows",
    "subspace_intersect",
]
