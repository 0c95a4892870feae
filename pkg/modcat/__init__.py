"""Finite-dimensional modules: Hom, Ext, syzygies, decomposition, duals."""

from .decompose import (
    EndomorphismRing,
    IsoVerdict,
    basic_endomorphism_algebra,
    basic_generator,
    basic_part,
    decompose,
    endomorphism_algebra,
    endomorphism_ring,
    find_isomorphism,
    indecomposable_summands,
    is_isomorphic,
    is_isomorphic_indecomposable,
    require_isomorphic,
    same_additive_closure,
    same_multiset,
    summand_algebra,
    summand_count,
)
from .functors import (
    dual_map,
    dual_module,
    extension_middle_terms,
    pushout,
    pushout_extension,
    trace_radical,
    trace_submodule,
    twist,
)
from .hom import hom_basis, hom_dim, hom_space, hom_subspace, image_of_all, random_hom
from .module import (
    Module,
    ModuleMap,
    column_space,
    dimension_vector,
    direct_sum,
    direct_sum_maps,
    generated_submodule,
    identity_map,
    inclusion_map,
    indecomposable_projectives,
    quotient_map,
    quotient_module,
    radical_submodule,
    radical_subspace,
    random_quotient_of_free,
    regular_module,
    simple_modules,
    socle_subspace,
    submodule,
    top,
    zero_module,
)
from .resolution import (
    DEFAULT_CUTOFF,
    ProjectiveCover,
    ext,
    first_syzygy,
    is_projective,
    projective_cover,
    projective_dimension,
    syzygy,
    top_multiplicities,
    with_vertices,
)
from .serialization import module_from_json, module_to_json

__all__ = [
    "DEFAULT_CUTOFF",
    "EndomorphismRing",
    "IsoVerdict",
    "Module",
    "ModuleMap",
    "ProjectiveCover",
    "basic_endomorphism_algebra",
    "basic_generator",
    "basic_part",
    "column_space",
    "decompose",
    "dimension_vector",
    "direct_sum",
    "direct_sum_maps",
    "dual_map",
    "dual_module",
    "endomorphism_algebra",
    "endomorphism_ring",
    "ext",
    "extension_middle_terms",
    "find_isomorphism",
    "first_syzygy",
    "generated_submodule",
    "hom_basis",
    "hom_dim",
    "hom_space",
    "hom_subspace",
    "identity_map",
    "image_of_all",
    "inclusion_map",
    "indecomposable_projectives",
    "indecomposable_summands",
    "is_isomorphic",
    "is_isomorphic_indecomposable",
    "is_projective",
    "module_from_json",
    "module_to_json",
    "projective_cover",
    "projective_dimension",
    "pushout",
    "pushout_extension",
    "quotient_map",
    "quotient_module",
    "radical_submodule",
    "radical_subspace",
    "random_hom",
    "random_quotient_of_free",
    "regular_module",
    "require_isomorphic",
    "same_additive_closure",
    "same_multiset",
    "simple_modules",
    "socle_subspace",
    "submodule",
    "summand_algebra",
    "summand_count",
    "syzygy",
    "top",
    "top_multiplicities",
    "trace_radical",
    "trace_submodule",
    "twist",
    "with_vertices",
    "zero_module",
]
