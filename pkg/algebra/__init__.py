"""Finite-dimensional algebras: structure constants, ideals, idempotents, quivers."""

from .algebra import Algebra, base_field_algebra, matrix_algebra, opposite, product_algebra
from .ideals import (
    Ideal,
    ideal_generated,
    ideal_power,
    ideal_product,
    ideal_sum,
    loewy_length,
    quotient_algebra,
    quotient_projection,
    radical,
    radical_powers,
    span_of_products,
    whole_ideal,
    zero_ideal,
)
from .idempotents import (
    cartan_matrix,
    clear_idempotent_cache,
    ensure_idempotents,
    is_basic,
    primitive_idempotents,
    require_basic,
)
from .path_algebra import (
    Arrow,
    Path,
    PathQuotient,
    Quiver,
    build_path_quotient,
    path_algebra_mod_relations,
    upper_triangular_algebra,
)
from .presentation import QuiverPresentation, present_as_quiver
from .serialization import algebra_from_json, algebra_to_json, presentation_from_json, presentation_to_json

__all__ = [
    "Algebra",
    "Arrow",
    "Ideal",
    "Path",
    "PathQuotient",
    "Quiver",
    "QuiverPresentation",
    "algebra_from_json",
    "algebra_to_json",
    "base_field_algebra",
    "build_path_quotient",
    "cartan_matrix",
    "clear_idempotent_cache",
    "ensure_idempotents",
    "ideal_generated",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "is_basic",
    "loewy_length",
    "matrix_algebra",
    "opposite",
    "path_algebra_mod_relations",
    "present_as_quiver",
    "presentation_from_json",
    "presentation_to_json",
    "primitive_idempotents",
    "product_algebra",
    "quotient_algebra",
    "quotient_projection",
    "radical",
    "radical_powers",
    "require_basic",
    "span_of_products",
    "upper_triangular_algebra",
    "whole_ideal",
    "zero_ideal",
]
