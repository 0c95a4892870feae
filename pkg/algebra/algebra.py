"""Finite-dimensional associative unital algebras by structure constants."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import NotAssociativeError, SmallCharacteristic
from linalg import FieldSpec, Subspace


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Algebra:
    """Algebra with basis b_0..b_{d-1} and b_i b_j = sum_k structure[i, j, k] b_k.

    ``idempotents`` is an optional complete list of orthogonal idempotents
    (coordinate vectors); for the algebras built here they are primitive and
    label the vertices of the quiver.
    """

    field: FieldSpec
    structure: np.ndarray
    unit: np.ndarray
    labels: Tuple[str, ...]
    idempotents: Tuple[np.ndarray, ...] = ()
    idempotent_labels: Tuple[str, ...] = ()
    name: str = ""

    @classmethod
    def build(
        cls,
        fld: FieldSpec,
        structure: np.ndarray,
        unit: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        idempotents: Sequence[np.ndarray] = (),
        idempotent_labels: Optional[Sequence[str]] = None,
        name: str = "",
        check: bool = True,
    ) -> "Algebra":
        structure = fld.asarray(structure)
        d = structure.shape[0]
        if structure.shape != (d, d, d):
            raise NotAssociativeError(f"Structure constants must be d x d x d, got {structure.shape}")
        labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(d))
        idems = tuple(fld.asarray(e) for e in idempotents)
        ilabels = (
            tuple(idempotent_labels)
            if idempotent_labels is not None
            else tuple(str(i + 1) for i in range(len(idems)))
        )
        algebra = cls(fld, structure, fld.asarray(unit), labels, idems, ilabels, name)
        if check:
            algebra.validate()
        return algebra

    # -- basic data ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    @cached_property
    def key(self) -> str:
        return self.field.digest(self.structure, self.unit)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.scalar(1)
        return v

    def zero(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def __repr__(self) -> str:
        return f"Algebra({self.name or 'unnamed'}, dim={self.dim}, field={self.field.label})"

    # -- multiplication ------------------------------------------------------

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        d = self.dim
        if d == 0:
            return self.zero()
        left = self.field.matmul(x, self.structure.reshape(d, d * d)).reshape(d, d)
        return self.field.matmul(y, left)

    def mul_many(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """All products x_a y_b as an (a*b) x d array."""
        d = self.dim
        left = self.field.matmul(xs, self.structure.reshape(d, d * d)).reshape(-1, d, d)
        prods = self.field.reduce(np.einsum("bj,ajk->abk", ys, left))
        return prods.reshape(-1, d)

    def power(self, x: np.ndarray, k: int) -> np.ndarray:
        result = self.unit
        for _ in range(k):
            result = self.mul(result, x)
        return result

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of y -> x y on coordinate columns."""
        return self.field.reduce(np.einsum("i,ijk->kj", x, self.structure))

    def right_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of y -> y x on coordinate columns."""
        return self.field.reduce(np.einsum("j,ijk->ki", x, self.structure))

    @cached_property
    def regular_action(self) -> np.ndarray:
        """act[i] = left multiplication by b_i."""
        act = np.ascontiguousarray(self.structure.transpose(0, 2, 1))
        return act

    def is_idempotent(self, e: np.ndarray) -> bool:
        return np.array_equal(self.mul(e, e), self.field.reduce(e))

    # -- validation ----------------------------------------------------------

    def validate(self) -> None:
        fld, c, d = self.field, self.structure, self.dim
        if d == 0:
            raise NotAssociativeError("Zero algebra has no unit")
        # (b_i b_j) b_k against b_i (b_j b_k)
        lhs = fld.reduce(np.tensordot(c, c, axes=([2], [0])))
        rhs = fld.reduce(np.einsum("jkl,ilm->ijkm", c, c))
        if not np.array_equal(lhs, rhs):
            raise NotAssociativeError(f"Structure constants of {self.name or 'algebra'} are not associative")
        lu = self.left_matrix(self.unit)
        ru = self.right_matrix(self.unit)
        eye = fld.eye(d)
        if not (np.array_equal(lu, eye) and np.array_equal(ru, eye)):
            raise NotAssociativeError("Unit laws fail")
        if self.idempotents:
            total = fld.reduce(sum(self.idempotents))
            if not np.array_equal(total, self.unit):
                raise NotAssociativeError("Distinguished idempotents do not sum to 1")
            for a, e in enumerate(self.idempotents):
                for b, f in enumerate(self.idempotents):
                    prod = self.mul(e, f)
                    expected = e if a == b else fld.zeros(d)
                    if not np.array_equal(prod, expected):
                        raise NotAssociativeError(f"Idempotents {a}, {b} are not orthogonal idempotents")

    # -- derived structure ---------------------------------------------------

    def with_idempotents(
        self, idempotents: Sequence[np.ndarray], labels: Optional[Sequence[str]] = None
    ) -> "Algebra":
        return Algebra.build(
            self.field,
            self.structure,
            self.unit,
            self.labels,
            idempotents,
            labels,
            name=self.name,
            check=False,
        )

    @cached_property
    def radical(self) -> Subspace:
        """Jacobson radical via the trace form (Dickson criterion)."""
        fld, d = self.field, self.dim
        if not fld.is_rational and fld.characteristic <= d:
            raise SmallCharacteristic(
                f"Characteristic {fld.characteristic} <= dim {d}; trace-form radical unavailable"
            )
        traces = fld.reduce(np.einsum("kjj->k", self.structure))
        gram = fld.reduce(np.einsum("ijk,k->ij", self.structure, traces))
        rad = Subspace.from_matrix(fld, fld.nullspace(gram.T))
        logger.debug(f"{self!r}: radical of dimension {rad.dim}")
        return rad

    @cached_property
    def radical_squared(self) -> Subspace:
        rad = self.radical
        if rad.dim == 0:
            return rad
        return Subspace.from_matrix(self.field, self.mul_many(rad.basis, rad.basis))

    def corner(self, e: np.ndarray, f: np.ndarray) -> Subspace:
        """The subspace e A f."""
        mat = self.field.matmul(self.left_matrix(e), self.right_matrix(f))
        return Subspace.from_matrix(self.field, mat.T)

    @cached_property
    def arrow_elements(self) -> Tuple[Tuple[int, int, np.ndarray], ...]:
        """Lifts (i, j, x) of a basis of e_j (rad / rad^2) e_i, i.e. arrows i -> j.

        Needs distinguished primitive idempotents.
        """
        rad, rad2 = self.radical, self.radical_squared
        arrows: List[Tuple[int, int, np.ndarray]] = []
        for j, ej in enumerate(self.idempotents):
            for i, ei in enumerate(self.idempotents):
                block = self.corner(ej, ei).intersect(rad)
                current = rad2
                for vec in block.basis:
                    if not current.contains(vec):
                        arrows.append((i, j, vec))
                        current = current.sum(Subspace.span(self.field, self.dim, [vec]))
        return tuple(arrows)

    @cached_property
    def generators(self) -> Tuple[np.ndarray, ...]:
        """Algebra generators: idempotents plus arrows when those span A/rad."""
        if self.idempotents and len(self.idempotents) + self.radical.dim == self.dim:
            return tuple(self.idempotents) + tuple(x for _, _, x in self.arrow_elements)
        return tuple(self.basis_vector(i) for i in range(self.dim))

    @cached_property
    def nonidempotent_generators(self) -> Tuple[np.ndarray, ...]:
        if self.idempotents and len(self.idempotents) + self.radical.dim == self.dim:
            return tuple(x for _, _, x in self.arrow_elements)
        return self.generators


def opposite(algebra: Algebra) -> Algebra:
    return Algebra.build(
        algebra.field,
        np.ascontiguousarray(algebra.structure.transpose(1, 0, 2)),
        algebra.unit,
        algebra.labels,
        algebra.idempotents,
        algebra.idempotent_labels,
        name=f"{algebra.name}^op" if algebra.name else "",
        check=False,
    )


def base_field_algebra(fld: FieldSpec) -> Algebra:
    return Algebra.build(fld, [[[1]]], [1], ["e1"], [[1]], ["1"], name="k")


def matrix_algebra(fld: FieldSpec, n: int) -> Algebra:
    """Full matrix algebra M_n(k) on matrix units E_{ab} (index a*n + b)."""
    d = n * n
    structure = np.zeros((d, d, d), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                structure[a * n + b, b * n + c, a * n + c] = 1
    unit = np.zeros(d, dtype=np.int64)
    for a in range(n):
        unit[a * n + a] = 1
    labels = [f"E{a + 1}{b + 1}" for a in range(n) for b in range(n)]
    return Algebra.build(fld, structure, unit, labels, name=f"M{n}")


def product_algebra(fld: FieldSpec, copies: int) -> Algebra:
    """k x ... x k with the coordinate idempotents distinguished."""
    structure = np.zeros((copies, copies, copies), dtype=np.int64)
    for i in range(copies):
        structure[i, i, i] = 1
    idems = [np.eye(copies, dtype=np.int64)[i] for i in range(copies)]
    return Algebra.build(
        fld, structure, np.ones(copies, dtype=np.int64), [f"e{i + 1}" for i in range(copies)], idems,
        name=f"k^{copies}",
    )

