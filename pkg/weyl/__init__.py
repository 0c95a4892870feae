"""Simply-laced Weyl groups: elements, lengths, reduced words, condition (P)."""

from .dynkin import DynkinType, positive_roots, simple_reflections
from .group import (
    DEFAULT_ENUMERATION_BOUND,
    WeylElement,
    alternative_reduced_word,
    condition_P,
    demazure_product,
    element_from_word,
    enumerate_elements,
    format_word,
    identity,
    left_weak_leq,
    length,
    longest_element,
    parse_word,
    reduced_word,
    right_weak_leq,
    simple_reflection,
)

__all__ = [
    "DEFAULT_ENUMERATION_BOUND",
    "DynkinType",
    "WeylElement",
    "alternative_reduced_word",
    "condition_P",
    "demazure_product",
    "element_from_word",
    "enumerate_elements",
    "format_word",
    "identity",
    "left_weak_leq",
    "length",
    "longest_element",
    "parse_word",
    "positive_roots",
    "reduced_word",
    "right_weak_leq",
    "simple_reflection",
    "simple_reflections",
]
