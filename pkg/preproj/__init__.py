"""Preprojective algebras, torsion ideals and the Frobenius categories C_{v,w}."""

from .auslander import auslander_algebra, preprojective_auslander_algebra
from .category import (
    FrobeniusCategory,
    InducedMap,
    KernelCokernel,
    induced_maps,
    injectives_of_C,
    kernel_cokernel_in_C,
    lambda_w,
    pi_upper_v,
    pi_vw,
    pi_w,
    pvw,
    sample_module_in_C,
)
from .convention import DEFAULT_CONVENTION, check_convention, convention_names, ideal_index
from .counterexample import (
    CommutativityFailure,
    CounterexampleReport,
    commutativity_counterexample,
    indecomposables_of,
    is_torsion_class,
)
from .preprojective import (
    PreprojectiveAlgebra,
    build_psi,
    doubled_quiver,
    duality_Phi,
    is_anti_automorphism,
    preprojective,
    preprojective_relations,
    psi_map,
)
from .torsion import (
    TorsionData,
    TorsionSplit,
    class_containment,
    clear_torsion_cache,
    ideal_action_subspace,
    ideal_along_word,
    in_category,
    in_torsion_class,
    in_torsion_free_class,
    random_module,
    simple_torsion_ideal,
    split_by,
    t_functor,
    torsion_apply,
    torsion_ideal,
    torsion_pair_violations,
)

__all__ = [
    "DEFAULT_CONVENTION",
    "CommutativityFailure",
    "CounterexampleReport",
    "FrobeniusCategory",
    "InducedMap",
    "KernelCokernel",
    "PreprojectiveAlgebra",
    "TorsionData",
    "TorsionSplit",
    "auslander_algebra",
    "build_psi",
    "check_convention",
    "class_containment",
    "clear_torsion_cache",
    "commutativity_counterexample",
    "convention_names",
    "doubled_quiver",
    "duality_Phi",
    "ideal_action_subspace",
    "ideal_along_word",
    "ideal_index",
    "in_category",
    "in_torsion_class",
    "in_torsion_free_class",
    "indecomposables_of",
    "induced_maps",
    "injectives_of_C",
    "is_anti_automorphism",
    "is_torsion_class",
    "kernel_cokernel_in_C",
    "lambda_w",
    "pi_upper_v",
    "pi_vw",
    "pi_w",
    "preprojective",
    "preprojective_auslander_algebra",
    "preprojective_relations",
    "psi_map",
    "pvw",
    "random_module",
    "sample_module_in_C",
    "simple_torsion_ideal",
    "split_by",
    "t_functor",
    "torsion_apply",
    "torsion_ideal",
    "torsion_pair_violations",
]
