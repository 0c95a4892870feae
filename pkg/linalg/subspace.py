"""Canonical linear subspaces of k^n."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from core.exceptions import DimensionMismatchError
from .field import FieldSpec, stack_rows


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Subspace:
    """Row space of ``basis``, kept in reduced row-echelon form.

    Two equal subspaces always carry identical ``basis`` arrays, so equality
    and hashing compare the canonical form directly.
    """

    field: FieldSpec
    ambient: int
    basis: np.ndarray
    pivots: Tuple[int, ...] = ()

    @classmethod
    def span(cls, fld: FieldSpec, ambient: int, vectors: Sequence[np.ndarray]) -> "Subspace":
        mat = stack_rows(fld, [fld.asarray(v).reshape(-1) for v in vectors], ambient)
        return cls.from_matrix(fld, mat)

    @classmethod
    def from_matrix(cls, fld: FieldSpec, matrix: np.ndarray) -> "Subspace":
        ambient = matrix.shape[1]
        if matrix.shape[0] == 0:
            return cls.zero(fld, ambient)
        r, pivots = fld.rref(matrix)
        return cls(fld, ambient, r, tuple(pivots))

    @classmethod
    def zero(cls, fld: FieldSpec, ambient: int) -> "Subspace":
        return cls(fld, ambient, fld.zeros((0, ambient)), ())

    @classmethod
    def whole(cls, fld: FieldSpec, ambient: int) -> "Subspace":
        return cls(fld, ambient, fld.eye(ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def complement_coordinates(self) -> List[int]:
        """Non-pivot coordinates; their unit vectors span a complement."""
        pv = set(self.pivots)
        return [c for c in range(self.ambient) if c not in pv]

    def _check(self, other: "Subspace") -> None:
        self.field.check_same(other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatchError(
                f"Ambient dimension mismatch: {self.ambient} vs {other.ambient}"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.pivots, self.field.digest(self.basis)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, field={self.field.label})"

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_matrix(self.field, np.concatenate([self.basis, other.basis], axis=0))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        # x = a·U = b·V  <=>  [U^T | -V^T] (a, b) = 0
        system = np.concatenate([self.basis.T, self.field.reduce(-other.basis.T)], axis=1)
        coeffs = self.field.nullspace(system)[:, : self.dim]
        return Subspace.from_matrix(self.field, self.field.matmul(coeffs, self.basis))

    def contains(self, vector: np.ndarray) -> bool:
        v = self.field.asarray(vector).reshape(-1)
        return self.field.is_zero(self.residual(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(row) for row in other.basis)

    def coordinates(self, vector: np.ndarray) -> np.ndarray:
        """Coordinates of a member vector in the canonical basis."""
        return np.array(self.field.asarray(vector).reshape(-1)[list(self.pivots)], dtype=self.field.dtype)

    def residual(self, vector: np.ndarray) -> np.ndarray:
        """Normal form of ``vector`` modulo the subspace (zero iff member)."""
        if self.dim == 0:
            return vector
        coeffs = vector[list(self.pivots)]
        return self.field.reduce(vector - self.field.matmul(coeffs, self.basis))

    def quotient_projection(self) -> np.ndarray:
        """Matrix P (q x n) sending v to its class in the complement coordinates."""
        comp = self.complement_coordinates
        proj = self.field.zeros((len(comp), self.ambient))
        for k, c in enumerate(comp):
            proj[k, c] = self.field.scalar(1)
        if self.dim:
            proj[:, list(self.pivots)] = self.field.reduce(-self.basis[:, comp].T)
        return proj

    def complement_embedding(self) -> np.ndarray:
        """Matrix Q (n x q) embedding the complement coordinates."""
        comp = self.complement_coordinates
        emb = self.field.zeros((self.ambient, len(comp)))
        for k, c in enumerate(comp):
            emb[c, k] = self.field.scalar(1)
        return emb


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Canonical U ∩ V."""
    return u.intersect(v)
