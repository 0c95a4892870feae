"""Homological dimensions, Gorenstein-projective modules and Morita fingerprints."""

from .dimensions import (
    ABOVE_CUTOFF,
    LEFT,
    RIGHT,
    AboveCutoff,
    Dimension,
    DimensionReport,
    Resolution,
    dimension_report,
    dual_of_regular,
    format_dimension,
    global_dimension,
    injective_dimension,
    is_finite,
    resolve,
    virtual_dimension,
)
from .gorenstein import GPEquivalenceReport, HomFunctor, gp_equivalence_check, gp_membership
from .morita import Fingerprint, canonical_cartan, fingerprint, morita_consistent, transpose_fingerprint

__all__ = [
    "ABOVE_CUTOFF",
    "LEFT",
    "RIGHT",
    "AboveCutoff",
    "Dimension",
    "DimensionReport",
    "Fingerprint",
    "GPEquivalenceReport",
    "HomFunctor",
    "Resolution",
    "canonical_cartan",
    "dimension_report",
    "dual_of_regular",
    "fingerprint",
    "format_dimension",
    "global_dimension",
    "gp_equivalence_check",
    "gp_membership",
    "injective_dimension",
    "is_finite",
    "morita_consistent",
    "resolve",
    "transpose_fingerprint",
    "virtual_dimension",
]
