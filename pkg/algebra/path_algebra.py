"""Quivers, paths and finite-dimensional quotients of path algebras.

Paths are stored in traversal order. The product x·y of two paths means
"first y, then x" and is nonzero only when y ends where x starts, so an
arrow i -> j lies in e_j A e_i.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import AlgebraError, NotFiniteDimensional
from linalg import FieldSpec, Subspace, stack_rows
from .algebra import Algebra


logger = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 12


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    label: str


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    arrows: Tuple[int, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)


Relation = Tuple[Tuple[Any, Path], ...]


@dataclass(frozen=True)
class Quiver:
    """Vertices 0..n-1 with optional labels; arrows in a fixed order."""

    vertex_count: int
    arrows: Tuple[Arrow, ...] = ()
    vertex_labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for arrow in self.arrows:
            if not (0 <= arrow.source < self.vertex_count and 0 <= arrow.target < self.vertex_count):
                raise AlgebraError(f"Arrow {arrow.label} has an endpoint outside the quiver")

    def label_of(self, vertex: int) -> str:
        return self.vertex_labels[vertex] if self.vertex_labels else str(vertex + 1)

    def trivial_path(self, vertex: int) -> Path:
        return Path(vertex, vertex, ())

    def path(self, arrow_indices: Sequence[int]) -> Path:
        """The path traversing the given arrows in order."""
        if not arrow_indices:
            raise AlgebraError("Use trivial_path for paths of length 0")
        for a, b in zip(arrow_indices, arrow_indices[1:]):
            if self.arrows[a].target != self.arrows[b].source:
                raise AlgebraError(
                    f"Arrows {self.arrows[a].label} and {self.arrows[b].label} do not compose"
                )
        return Path(self.arrows[arrow_indices[0]].source, self.arrows[arrow_indices[-1]].target, tuple(arrow_indices))

    def path_by_labels(self, labels: Sequence[str]) -> Path:
        index = {arrow.label: k for k, arrow in enumerate(self.arrows)}
        try:
            return self.path([index[label] for label in labels])
        except KeyError as e:
            raise AlgebraError(f"Unknown arrow label {e.args[0]!r}") from e

    def path_label(self, path: Path) -> str:
        if not path.arrows:
            return f"e{self.label_of(path.source)}"
        return ".".join(self.arrows[a].label for a in path.arrows)

    def paths_up_to(self, max_length: int) -> List[List[Path]]:
        """paths[k] lists the paths of length k, 0 <= k <= max_length."""
        layers = [[self.trivial_path(v) for v in range(self.vertex_count)]]
        for _ in range(max_length):
            nxt = []
            for p in layers[-1]:
                for k, arrow in enumerate(self.arrows):
                    if arrow.source == p.target:
                        nxt.append(Path(p.source, arrow.target, p.arrows + (k,)))
            layers.append(nxt)
        return layers

    def concat(self, first: Path, second: Path) -> Optional[Path]:
        """``first`` then ``second``, or None if they do not meet."""
        if first.target != second.source:
            return None
        return Path(first.source, second.target, first.arrows + second.arrows)


def check_admissible(relations: Sequence[Relation]) -> None:
    for relation in relations:
        paths = [p for _, p in relation]
        if not paths:
            continue
        if any(p.length < 2 for p in paths):
            raise AlgebraError("Relations must be combinations of paths of length >= 2")
        ends = {(p.source, p.target) for p in paths}
        if len(ends) != 1:
            raise AlgebraError("Relation mixes paths with different endpoints")


class TruncatedPathSpace:
    """Coordinates on the paths of length < ``bound``, longest paths first."""

    def __init__(self, quiver: Quiver, fld: FieldSpec, bound: int):
        self.quiver = quiver
        self.field = fld
        self.bound = bound
        layers = quiver.paths_up_to(bound - 1)
        self.paths: List[Path] = [p for layer in reversed(layers) for p in layer]
        self.index: Dict[Path, int] = {p: k for k, p in enumerate(self.paths)}
        self.top_layer = layers[-1] if bound > 0 else []
        self._shifts = self._arrow_shifts()

    @property
    def dim(self) -> int:
        return len(self.paths)

    def _arrow_shifts(self) -> List[Tuple[np.ndarray, np.ndarray]]:
        shifts = []
        for k, arrow in enumerate(self.quiver.arrows):
            for before in (True, False):
                src, dst = [], []
                for col, p in enumerate(self.paths):
                    if before:
                        q = self.quiver.concat(Path(arrow.source, arrow.target, (k,)), p)
                    else:
                        q = self.quiver.concat(p, Path(arrow.source, arrow.target, (k,)))
                    if q is not None and q.length < self.bound:
                        src.append(col)
                        dst.append(self.index[q])
                shifts.append((np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64)))
        return shifts

    def vector(self, combination: Sequence[Tuple[Any, Path]]) -> np.ndarray:
        v = self.field.zeros(self.dim)
        for coeff, path in combination:
            if path.length < self.bound:
                v[self.index[path]] = self.field.reduce(v[self.index[path]] + self.field.scalar(coeff))
        return v

    def unit_vector(self, path: Path) -> np.ndarray:
        return self.vector([(1, path)])

    def ideal_closure(self, generators: Sequence[np.ndarray]) -> Subspace:
        """Two-sided ideal of the truncated path algebra generated by vectors."""
        fld = self.field
        current = Subspace.from_matrix(fld, stack_rows(fld, list(generators), self.dim))
        while current.dim:
            pieces = [current.basis]
            for src, dst in self._shifts:
                if src.size == 0:
                    continue
                moved = fld.zeros((current.dim, self.dim))
                moved[:, dst] = current.basis[:, src]
                pieces.append(moved)
            nxt = Subspace.from_matrix(fld, np.concatenate(pieces))
            if nxt.dim == current.dim:
                break
            current = nxt
        return current


@dataclass(frozen=True, eq=False)
class PathQuotient:
    """kQ/I together with the map sending path combinations to coordinates."""

    quiver: Quiver
    algebra: Algebra
    space: TruncatedPathSpace
    projection: np.ndarray
    basis_paths: Tuple[Path, ...]

    def element(self, combination: Sequence[Tuple[Any, Path]]) -> np.ndarray:
        return self.algebra.field.matmul(self.projection, self.space.vector(combination))

    def path_element(self, path: Path) -> np.ndarray:
        return self.element([(1, path)])

    def arrow_element(self, arrow_index: int) -> np.ndarray:
        arrow = self.quiver.arrows[arrow_index]
        return self.path_element(Path(arrow.source, arrow.target, (arrow_index,)))


def build_path_quotient(
    quiver: Quiver,
    relations: Sequence[Relation],
    fld: FieldSpec,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    name: str = "",
) -> PathQuotient:
    """Finite-dimensional kQ/(relations), truncating at growing path length."""
    check_admissible(relations)
    for bound in range(2, degree_cap + 2):
        space = TruncatedPathSpace(quiver, fld, bound)
        ideal = space.ideal_closure([space.vector(r) for r in relations])
        if all(ideal.contains(space.unit_vector(p)) for p in space.top_layer):
            logger.debug(f"Path quotient {name or ''} stabilized at path length {bound - 1}")
            return _assemble(quiver, space, ideal, name)
    raise NotFiniteDimensional(f"New basis paths still appear at degree cap {degree_cap}")


def _assemble(quiver: Quiver, space: TruncatedPathSpace, ideal: Subspace, name: str) -> PathQuotient:
    fld = space.field
    comp = ideal.complement_coordinates
    order = sorted(range(len(comp)), key=lambda k: (space.paths[comp[k]].length, comp[k]))
    comp = [comp[k] for k in order]
    projection = ideal.quotient_projection()[order]
    basis_paths = [space.paths[c] for c in comp]
    q = len(comp)
    structure = fld.zeros((q, q, q))
    for a, pa in enumerate(basis_paths):
        for b, pb in enumerate(basis_paths):
            prod = quiver.concat(pb, pa)
            if prod is not None and prod.length < space.bound:
                structure[a, b] = projection[:, space.index[prod]]
    idems = [fld.matmul(projection, space.unit_vector(quiver.trivial_path(v))) for v in range(quiver.vertex_count)]
    unit = fld.reduce(sum(idems)) if idems else fld.zeros(q)
    algebra = Algebra.build(
        fld,
        structure,
        unit,
        [quiver.path_label(p) for p in basis_paths],
        idems,
        [quiver.label_of(v) for v in range(quiver.vertex_count)],
        name=name,
    )
    return PathQuotient(quiver, algebra, space, projection, tuple(basis_paths))


def path_algebra_mod_relations(
    quiver: Quiver,
    relations: Sequence[Relation],
    fld: FieldSpec,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    name: str = "",
) -> Algebra:
    return build_path_quotient(quiver, relations, fld, degree_cap, name).algebra


def upper_triangular_algebra(fld: FieldSpec) -> Algebra:
    """Path algebra of 1 -> 2, i.e. upper-triangular 2 x 2 matrices."""
    quiver = Quiver(2, (Arrow(0, 1, "a"),))
    return path_algebra_mod_relations(quiver, [], fld, name="kA2")
