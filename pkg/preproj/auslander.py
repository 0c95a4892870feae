"""Auslander algebras End(⊕ indecomposables) of representation-finite algebras."""

import logging
from typing import Optional, Sequence

import numpy as np

from algebra import Algebra
from core.exceptions import ModuleError
from modcat import Module, basic_endomorphism_algebra, direct_sum
from .counterexample import indecomposables_of
from .preprojective import PreprojectiveAlgebra


logger = logging.getLogger(__name__)


def auslander_algebra(modules: Sequence[Module], rng: Optional[np.random.Generator] = None) -> Algebra:
    """Basic End of the direct sum of the given modules."""
    if not modules:
        raise ModuleError("Auslander algebra needs at least one module")
    total = direct_sum(list(modules), "M")
    algebra = basic_endomorphism_algebra(total, rng, name="Aus")
    logger.debug(f"Auslander algebra of {len(modules)} modules: dim {algebra.dim}")
    return algebra


def preprojective_auslander_algebra(pi: PreprojectiveAlgebra,
                                    rng: Optional[np.random.Generator] = None) -> Algebra:
    """Auslander algebra of Π(A1) or Π(A2), whose indecomposables are simple or projective."""
    if pi.dynkin.rank > 2:
        raise ModuleError(f"Indecomposables of {pi!r} are not all simple or projective")
    return auslander_algebra(indecomposables_of(pi.algebra), rng)
