"""Preprojective algebras of Dynkin quivers and their duality.

The quiver Q is oriented i -> j for every edge i < j. The doubled quiver adds
a* : j -> i, and the relation at vertex k is

    sum over a ending at k of a a*  -  sum over a starting at k of a* a,

with products read right to left (a a* is the path a* then a).
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Tuple

import numpy as np

from algebra import Algebra, Arrow, PathQuotient, Quiver, build_path_quotient
from algebra.path_algebra import DEFAULT_DEGREE_CAP, Path, Relation
from core.exceptions import AlgebraError, PsiConstructionError
from linalg import FieldSpec
from modcat import Module, dual_module, twist
from weyl import DynkinType


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PreprojectiveAlgebra:
    """Π(Q) with its doubled quiver and the pairing a <-> a*."""

    dynkin: DynkinType
    quotient: PathQuotient
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def algebra(self) -> Algebra:
        return self.quotient.algebra

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def quiver(self) -> Quiver:
        return self.quotient.quiver

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __repr__(self) -> str:
        return f"Π({self.dynkin.label}, dim={self.dim}, field={self.field.label})"

    def vertex_idempotent(self, vertex: int) -> np.ndarray:
        """e_i for a 1-based vertex label."""
        return self.algebra.idempotents[vertex - 1]

    def relation_elements(self) -> List[np.ndarray]:
        return [self.quotient.element(r) for r in preprojective_relations(self.quiver, self.pairs)]

    @cached_property
    def psi(self) -> np.ndarray:
        """Matrix whose i-th row holds ψ(b_i); ψ is an anti-automorphism."""
        return build_psi(self)


def doubled_quiver(dynkin: DynkinType) -> Tuple[Quiver, Tuple[Tuple[int, int], ...]]:
    arrows: List[Arrow] = []
    pairs: List[Tuple[int, int]] = []
    for i, j in dynkin.edges:
        arrows.append(Arrow(i - 1, j - 1, f"a{i}{j}"))
        arrows.append(Arrow(j - 1, i - 1, f"a{i}{j}*"))
        pairs.append((len(arrows) - 2, len(arrows) - 1))
    labels = tuple(str(i) for i in range(1, dynkin.rank + 1))
    return Quiver(dynkin.rank, tuple(arrows), labels), tuple(pairs)


def preprojective_relations(quiver: Quiver, pairs: Tuple[Tuple[int, int], ...]) -> List[Relation]:
    relations: List[Relation] = []
    for k in range(quiver.vertex_count):
        terms = []
        for a, star in pairs:
            arrow = quiver.arrows[a]
            if arrow.target == k:
                terms.append((1, quiver.path([star, a])))
            if arrow.source == k:
                terms.append((-1, quiver.path([a, star])))
        if terms:
            relations.append(tuple(terms))
    return relations


@lru_cache(maxsize=None)
def preprojective(
    dynkin: DynkinType, fld: FieldSpec = FieldSpec(), degree_cap: int = DEFAULT_DEGREE_CAP
) -> PreprojectiveAlgebra:
    quiver, pairs = doubled_quiver(dynkin)
    relations = preprojective_relations(quiver, pairs)
    quotient = build_path_quotient(quiver, relations, fld, degree_cap, name=f"Pi({dynkin.label})")
    pi = PreprojectiveAlgebra(dynkin, quotient, pairs)
    for k, rel in enumerate(pi.relation_elements()):
        if not fld.is_zero(rel):
            raise AlgebraError(f"Preprojective relation at vertex {k + 1} does not vanish")
    logger.info(f"Built {pi!r}")
    return pi


def _psi_candidate(pi: PreprojectiveAlgebra, sign: int) -> np.ndarray:
    fld = pi.field
    quiver = pi.quiver
    partner = {}
    for a, star in pi.pairs:
        partner[a] = (star, 1)
        partner[star] = (a, sign)
    rows = []
    for path in pi.quotient.basis_paths:
        if not path.arrows:
            rows.append(pi.quotient.path_element(path))
            continue
        images = [partner[a] for a in reversed(path.arrows)]
        coeff = 1
        for _, s in images:
            coeff *= s
        image_path = Path(path.target, path.source, tuple(b for b, _ in images))
        rows.append(pi.quotient.element([(coeff, quiver.path(list(image_path.arrows)))]))
    return np.array(np.vstack(rows), dtype=fld.dtype)


def is_anti_automorphism(algebra: Algebra, images: np.ndarray) -> bool:
    """ψ(b_i b_j) = ψ(b_j) ψ(b_i) on basis pairs and ψ(1) = 1."""
    fld = algebra.field
    lhs = fld.reduce(np.einsum("ijk,kl->ijl", algebra.structure, images))
    prods = algebra.mul_many(images, images).reshape(algebra.dim, algebra.dim, algebra.dim)
    rhs = np.ascontiguousarray(prods.transpose(1, 0, 2))
    unit_ok = np.array_equal(fld.matmul(algebra.unit, images), algebra.unit)
    return unit_ok and np.array_equal(lhs, rhs) and fld.rank(images) == algebra.dim


def build_psi(pi: PreprojectiveAlgebra) -> np.ndarray:
    """Fix the vertices, send a to a* and a* to ±a; the sign is validated."""
    for sign in (1, -1):
        images = _psi_candidate(pi, sign)
        if is_anti_automorphism(pi.algebra, images):
            logger.debug(f"{pi!r}: ψ built with sign {sign} on starred arrows")
            return images
    raise PsiConstructionError(f"No sign convention gives an anti-automorphism of {pi!r}")


def psi_map(pi: PreprojectiveAlgebra) -> np.ndarray:
    """ψ as a matrix on the path basis of Π."""
    return pi.psi


def duality_Phi(pi: PreprojectiveAlgebra, module: Module) -> Module:
    """Φ(M): the dual D(M) made into a left Π-module through ψ."""
    return twist(dual_module(module), pi.algebra, psi_map(pi))
