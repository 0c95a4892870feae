"""f_v t_w = t_w f_v fails for arbitrary torsion pairs.

Over the path algebra of 1 -> 2 every torsion class is additive, so it is
fixed by a subset of the three indecomposables S1, S2 = P2 and P1. The search
enumerates all subsets, keeps those closed under quotients and extensions and
compares f_1 t_2(M) with t_2 f_1(M) on every indecomposable M.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from algebra import Algebra, upper_triangular_algebra
from linalg import FieldSpec
from modcat import (
    IsoVerdict,
    Module,
    decompose,
    extension_middle_terms,
    indecomposable_projectives,
    is_isomorphic,
    is_isomorphic_indecomposable,
    quotient_module,
    simple_modules,
    submodule,
    trace_radical,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutativityFailure:
    free_class: Tuple[str, ...]
    torsion_class: Tuple[str, ...]
    module: str
    f_then_t_dim: int
    t_then_f_dim: int


@dataclass
class CounterexampleReport:
    algebra: str
    indecomposables: List[str]
    torsion_classes: List[Tuple[str, ...]] = field(default_factory=list)
    failures: List[CommutativityFailure] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.failures)


def indecomposables_of(algebra: Algebra) -> List[Module]:
    """Simples and indecomposable projectives, one per isomorphism class."""
    found: List[Module] = []
    for candidate in simple_modules(algebra) + indecomposable_projectives(algebra):
        if not any(is_isomorphic_indecomposable(candidate, m) for m in found):
            found.append(candidate)
    return found


def _label_of(module: Module, catalogue: Sequence[Module]) -> Optional[str]:
    for m in catalogue:
        if is_isomorphic_indecomposable(module, m):
            return m.name
    return None


def _torsion(cls: Sequence[Module], module: Module) -> Module:
    return submodule(module, trace_radical(list(cls), module))


def _free(cls: Sequence[Module], module: Module) -> Module:
    return quotient_module(module, trace_radical(list(cls), module))


def is_torsion_class(cls: Sequence[Module], catalogue: Sequence[Module]) -> bool:
    """Closed under quotients and extensions, tested on indecomposables."""
    members = {m.name for m in cls}
    for y in catalogue:
        if y.name in members:
            continue
        if trace_radical(list(cls), y).dim == y.dim:
            return False
    for x in cls:
        for z in cls:
            for middle in extension_middle_terms(z, x):
                for piece, _ in decompose(middle):
                    if _label_of(piece, catalogue) not in members:
                        return False
    return True


def commutativity_counterexample(fld: Optional[FieldSpec] = None,
                                 rng: Optional[np.random.Generator] = None) -> CounterexampleReport:
    """Search all pairs of torsion classes over k(1 -> 2)."""
    fld = fld if fld is not None else FieldSpec()
    rng = rng if rng is not None else np.random.default_rng(0)
    algebra = upper_triangular_algebra(fld)
    catalogue = indecomposables_of(algebra)
    report = CounterexampleReport(algebra.name, [m.name for m in catalogue])
    classes = [
        list(subset)
        for size in range(len(catalogue) + 1)
        for subset in combinations(catalogue, size)
        if is_torsion_class(list(subset), catalogue)
    ]
    report.torsion_classes = [tuple(m.name for m in cls) for cls in classes]
    logger.info(f"{algebra.name}: torsion classes {report.torsion_classes}")
    for first in classes:
        for second in classes:
            for module in catalogue:
                f_t = _free(first, _torsion(second, module))
                t_f = _torsion(second, _free(first, module))
                if is_isomorphic(f_t, t_f, rng=rng) is not IsoVerdict.ISOMORPHIC:
                    failure = CommutativityFailure(
                        tuple(m.name for m in first),
                        tuple(m.name for m in second),
                        module.name,
                        f_t.dim,
                        t_f.dim,
                    )
                    report.failures.append(failure)
                    logger.debug(f"f t != t f: {failure}")
    return report
