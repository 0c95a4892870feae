"""Quiver-with-relations presentations of split basic algebras."""

import logging
from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np

from core.exceptions import PresentationCapExceeded
from linalg import stack_rows
from .algebra import Algebra
from .idempotents import cartan_matrix, require_basic
from .ideals import loewy_length
from .path_algebra import Arrow, Path, Quiver, Relation, TruncatedPathSpace, path_algebra_mod_relations


logger = logging.getLogger(__name__)

DEFAULT_PRESENTATION_CAP = 10


@dataclass(frozen=True)
class QuiverPresentation:
    quiver: Quiver
    relations: Tuple[Relation, ...]
    degree_cap: int
    field_label: str = ""

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def arrows(self) -> Tuple[Arrow, ...]:
        return self.quiver.arrows


def evaluate_path(algebra: Algebra, arrow_elements: List[np.ndarray], path: Path) -> np.ndarray:
    """Image of a path: for a1 then a2 then ... the element ... a2 a1."""
    if not path.arrows:
        return algebra.idempotents[path.source]
    result = arrow_elements[path.arrows[0]]
    for a in path.arrows[1:]:
        result = algebra.mul(arrow_elements[a], result)
    return result


def present_as_quiver(
    algebra: Algebra,
    cap: int = DEFAULT_PRESENTATION_CAP,
) -> QuiverPresentation:
    """Vertices, arrows and a minimal set of relations for a split basic algebra.

    Relations are kept greedily by path length: a kernel element is new when it
    lies outside the ideal generated by those kept so far.
    """
    algebra = require_basic(algebra)
    fld = algebra.field
    n_vertices = len(algebra.idempotents)
    arrow_data = algebra.arrow_elements
    arrows = tuple(Arrow(i, j, f"x{k + 1}") for k, (i, j, _) in enumerate(arrow_data))
    quiver = Quiver(n_vertices, arrows, tuple(algebra.idempotent_labels))
    elements = [vec for _, _, vec in arrow_data]

    top = loewy_length(algebra)
    if top > cap:
        raise PresentationCapExceeded(f"Loewy length {top} exceeds presentation cap {cap}")
    space = TruncatedPathSpace(quiver, fld, top + 1)
    images = stack_rows(fld, [evaluate_path(algebra, elements, p) for p in space.paths], algebra.dim)

    kept: List[np.ndarray] = []
    relations: List[Relation] = []
    generated = space.ideal_closure([])
    for degree in range(2, top + 1):
        for source in range(n_vertices):
            for target in range(n_vertices):
                cols = [
                    k
                    for k, p in enumerate(space.paths)
                    if p.source == source and p.target == target and p.length <= degree
                ]
                if not cols:
                    continue
                kernel = fld.nullspace(images[cols].T)
                for row in _canonical_rows(fld, kernel):
                    vec = fld.zeros(space.dim)
                    vec[cols] = row
                    if generated.contains(vec):
                        continue
                    kept.append(vec)
                    relations.append(_as_relation(fld, space, vec))
                    generated = space.ideal_closure(kept)
    presentation = QuiverPresentation(quiver, tuple(relations), cap, fld.label)
    _reconcile(algebra, presentation)
    logger.info(
        f"Presented {algebra!r}: {n_vertices} vertices, {len(arrows)} arrows, {len(relations)} relations"
    )
    return presentation


def _canonical_rows(fld: Any, kernel: np.ndarray) -> np.ndarray:
    """Canonical basis rows of a kernel so tie-breaking is deterministic."""
    if kernel.shape[0] == 0:
        return kernel
    return fld.rref(kernel)[0]


def _as_relation(fld: Any, space: TruncatedPathSpace, vec: np.ndarray) -> Relation:
    terms = [(vec[k], space.paths[k]) for k in np.nonzero(vec != 0)[0]]
    terms.sort(key=lambda t: (t[1].length, t[1].arrows))
    return tuple((fld.scalar(c), p) for c, p in terms)


def _reconcile(algebra: Algebra, presentation: QuiverPresentation) -> None:
    rebuilt = path_algebra_mod_relations(
        presentation.quiver, presentation.relations, algebra.field, degree_cap=presentation.degree_cap
    )
    if rebuilt.dim != algebra.dim or not np.array_equal(cartan_matrix(rebuilt), cartan_matrix(algebra)):
        raise PresentationCapExceeded(
            f"Presentation does not reconcile: rebuilt dim {rebuilt.dim} vs {algebra.dim}"
        )
