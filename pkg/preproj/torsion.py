"""Torsion ideals I_w and the torsion pairs (Fac I_w, Sub Π/I_w).

I_w is only idempotent in special cases (in Π(A2), I_{s1 s2} is one arrow and
squares to zero), so the torsion radical of Fac(I_w) is the trace of I_w in
M rather than the product I_w·M.
"""

import logging
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra import Ideal, ideal_generated, ideal_product, whole_ideal
from core.exceptions import TorsionError
from linalg import Subspace
from modcat import (
    Module,
    ModuleMap,
    hom_dim,
    inclusion_map,
    quotient_map,
    quotient_module,
    random_quotient_of_free,
    regular_module,
    submodule,
    trace_radical,
)
from weyl import WeylElement, alternative_reduced_word, element_from_word, reduced_word
from .convention import DEFAULT_CONVENTION, ideal_index
from .preprojective import PreprojectiveAlgebra


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TorsionData:
    pi: PreprojectiveAlgebra
    w: WeylElement
    ideal: Ideal
    word: Tuple[int, ...]
    verified: bool = False

    @cached_property
    def module(self) -> Module:
        """I_w as a left Π-module."""
        return submodule(regular_module(self.pi.algebra), self.ideal.carrier, f"I[{','.join(map(str, self.word))}]")

    def is_idempotent(self) -> bool:
        return ideal_product(self.ideal, self.ideal) == self.ideal


@dataclass(frozen=True, eq=False)
class TorsionSplit:
    """0 -> t(M) -> M -> f(M) -> 0."""

    module: Module
    subspace: Subspace
    torsion: Module
    free: Module
    inclusion: ModuleMap
    projection: ModuleMap


_SIMPLE_IDEALS: Dict[Tuple[str, int], Ideal] = {}
_TORSION: Dict[Tuple[str, WeylElement], TorsionData] = {}


def simple_torsion_ideal(pi: PreprojectiveAlgebra, vertex: int) -> Ideal:
    """I_{s_i} = Π(1 - e_i)Π for a 1-based vertex."""
    key = (pi.algebra.key, vertex)
    if key not in _SIMPLE_IDEALS:
        alg = pi.algebra
        _SIMPLE_IDEALS[key] = ideal_generated(alg, [alg.field.reduce(alg.unit - pi.vertex_idempotent(vertex))])
    return _SIMPLE_IDEALS[key]


def ideal_along_word(pi: PreprojectiveAlgebra, word: Sequence[int]) -> Ideal:
    """I_{s_i1} I_{s_i2} ... I_{s_ik}; the empty word gives Π."""
    ideal = whole_ideal(pi.algebra)
    for i in word:
        ideal = ideal_product(ideal, simple_torsion_ideal(pi, i))
    return ideal


def _check_word_independence(pi: PreprojectiveAlgebra, w: WeylElement, word: List[int], ideal: Ideal) -> None:
    other = alternative_reduced_word(w)
    if other is None:
        return
    if element_from_word(w.dynkin, other) != w:
        raise TorsionError(f"Alternative word {other} does not represent {word}")
    if ideal_along_word(pi, other) != ideal:
        raise TorsionError(f"I_w depends on the reduced word: {word} vs {other}")


def torsion_ideal(pi: PreprojectiveAlgebra, w: WeylElement, verify: bool = True) -> TorsionData:
    """I_w along reduced_word(w), checked against a second reduced word when one exists.

    A cached entry built with verify=False is checked on the first verifying call.
    """
    key = (pi.algebra.key, w)
    data = _TORSION.get(key)
    if data is None:
        word = reduced_word(w)
        data = TorsionData(pi, w, ideal_along_word(pi, word), tuple(word), verified=len(word) < 2)
        logger.debug(f"I[{word}] in {pi!r}: dim {data.ideal.dim}")
    if verify and not data.verified:
        _check_word_independence(pi, w, list(data.word), data.ideal)
        data = replace(data, verified=True)
    _TORSION[key] = data
    return data


def clear_torsion_cache() -> None:
    _SIMPLE_IDEALS.clear()
    _TORSION.clear()


def ideal_action_subspace(data: TorsionData, module: Module) -> Subspace:
    """I_w·M."""
    fld = module.field
    if data.ideal.dim == 0 or module.dim == 0:
        return Subspace.zero(fld, module.dim)
    mats = module.act_many(data.ideal.basis)
    return Subspace.from_matrix(fld, mats.transpose(0, 2, 1).reshape(-1, module.dim))


def split_by(data: TorsionData, module: Module) -> TorsionSplit:
    sub = trace_radical([data.module], module)
    torsion = submodule(module, sub)
    free = quotient_module(module, sub)
    return TorsionSplit(
        module,
        sub,
        torsion,
        free,
        inclusion_map(module, sub, torsion),
        quotient_map(module, sub, free),
    )


def torsion_apply(pi: PreprojectiveAlgebra, u: WeylElement, module: Module) -> TorsionSplit:
    """Torsion radical and torsion-free quotient for the pair (Fac I_u, Sub Π/I_u)."""
    return split_by(torsion_ideal(pi, u), module)


def t_functor(pi: PreprojectiveAlgebra, x: WeylElement, module: Module,
              convention: str = DEFAULT_CONVENTION) -> TorsionSplit:
    """Split of M for the pair (C_x, C^x)."""
    return torsion_apply(pi, ideal_index(x, convention), module)


def in_torsion_class(pi: PreprojectiveAlgebra, u: WeylElement, module: Module) -> bool:
    return trace_radical([torsion_ideal(pi, u).module], module).dim == module.dim


def in_torsion_free_class(pi: PreprojectiveAlgebra, u: WeylElement, module: Module) -> bool:
    return trace_radical([torsion_ideal(pi, u).module], module).dim == 0


def in_category(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement, module: Module,
                convention: str = DEFAULT_CONVENTION) -> bool:
    """X in C_{v,w} = C_w ∩ C^v."""
    return in_torsion_class(pi, ideal_index(w, convention), module) and in_torsion_free_class(
        pi, ideal_index(v, convention), module
    )


def class_containment(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement,
                      convention: str = DEFAULT_CONVENTION) -> bool:
    """C_v ⊆ C_w, tested as I_{u(v)} in Fac(I_{u(w)})."""
    return in_torsion_class(pi, ideal_index(w, convention), torsion_ideal(pi, ideal_index(v, convention)).module)


def torsion_pair_violations(pi: PreprojectiveAlgebra, u: WeylElement, modules: Sequence[Module]) -> List[str]:
    """Axioms of a torsion pair checked on the given modules; empty when all hold."""
    problems: List[str] = []
    splits = [torsion_apply(pi, u, m) for m in modules]
    for k, split in enumerate(splits):
        fld = split.module.field
        again = torsion_apply(pi, u, split.torsion)
        if again.subspace.dim != split.torsion.dim:
            problems.append(f"module {k}: t is not idempotent")
        if torsion_apply(pi, u, split.free).subspace.dim != 0:
            problems.append(f"module {k}: t(f(M)) != 0")
        composite = fld.matmul(split.projection.matrix, split.inclusion.matrix)
        if not fld.is_zero(composite) or split.torsion.dim + split.free.dim != split.module.dim:
            problems.append(f"module {k}: 0 -> t -> M -> f -> 0 is not exact")
    for a, left in enumerate(splits):
        for b, right in enumerate(splits):
            if left.torsion.dim and right.free.dim and hom_dim(left.torsion, right.free):
                problems.append(f"Hom(t(M{a}), f(M{b})) != 0")
    return problems


def random_module(pi: PreprojectiveAlgebra, rng: np.random.Generator, copies: Optional[int] = None) -> Module:
    """A seeded random quotient of a free module."""
    copies = copies if copies is not None else int(rng.integers(1, 3))
    relations = int(rng.integers(1, 3))
    return random_quotient_of_free(pi.algebra, copies, relations, rng)
