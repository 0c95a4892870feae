"""Two-sided ideals, products and quotient algebras."""

import logging
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from core.exceptions import ImproperIdealError, ParentMismatchError
from linalg import Subspace, stack_rows
from .algebra import Algebra


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Ideal:
    """A two-sided ideal, stored as a canonical subspace of the parent's coordinates."""

    parent: Algebra
    carrier: Subspace

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def basis(self) -> np.ndarray:
        return self.carrier.basis

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.parent.key == other.parent.key and self.carrier == other.carrier

    def __hash__(self) -> int:
        return hash((self.parent.key, self.carrier))

    def __repr__(self) -> str:
        return f"Ideal(dim={self.dim}, parent={self.parent!r})"

    def contains(self, x: np.ndarray) -> bool:
        return self.carrier.contains(x)

    def contains_ideal(self, other: "Ideal") -> bool:
        _check_parent(self, other)
        return self.carrier.contains_subspace(other.carrier)

    def is_two_sided(self) -> bool:
        """Closure under left and right multiplication by every basis element."""
        if self.dim == 0:
            return True
        alg = self.parent
        gens = np.array([alg.basis_vector(i) for i in range(alg.dim)], dtype=alg.field.dtype)
        left = alg.mul_many(gens, self.basis)
        right = alg.mul_many(self.basis, gens)
        return all(self.carrier.contains(row) for row in np.concatenate([left, right]))

    def is_proper(self) -> bool:
        return not self.carrier.contains(self.parent.unit)


def _check_parent(i: Ideal, j: Ideal) -> None:
    if i.parent.key != j.parent.key:
        raise ParentMismatchError(f"Ideals live in different algebras: {i.parent!r} vs {j.parent!r}")


def zero_ideal(algebra: Algebra) -> Ideal:
    return Ideal(algebra, Subspace.zero(algebra.field, algebra.dim))


def whole_ideal(algebra: Algebra) -> Ideal:
    return Ideal(algebra, Subspace.whole(algebra.field, algebra.dim))


def ideal_generated(algebra: Algebra, elements: Sequence[np.ndarray]) -> Ideal:
    """Smallest two-sided ideal containing ``elements``."""
    fld = algebra.field
    current = Subspace.span(fld, algebra.dim, list(elements))
    gens = np.array(algebra.generators, dtype=fld.dtype)
    while current.dim:
        grown = np.concatenate(
            [current.basis, algebra.mul_many(gens, current.basis), algebra.mul_many(current.basis, gens)]
        )
        nxt = Subspace.from_matrix(fld, grown)
        if nxt.dim == current.dim:
            break
        current = nxt
    return Ideal(algebra, current)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """Span of all x·y with x in I, y in J (already two-sided)."""
    _check_parent(i, j)
    alg = i.parent
    if i.dim == 0 or j.dim == 0:
        return zero_ideal(alg)
    return Ideal(alg, Subspace.from_matrix(alg.field, alg.mul_many(i.basis, j.basis)))


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    _check_parent(i, j)
    return Ideal(i.parent, i.carrier.sum(j.carrier))


def ideal_power(i: Ideal, k: int) -> Ideal:
    result = whole_ideal(i.parent)
    for _ in range(k):
        result = ideal_product(result, i)
    return result


def radical(algebra: Algebra) -> Ideal:
    """The Jacobson radical as an Ideal."""
    return Ideal(algebra, algebra.radical)


def radical_powers(algebra: Algebra, max_power: int = 4) -> List[int]:
    """[dim rad^1, ..., dim rad^max_power]."""
    rad = radical(algebra)
    dims: List[int] = []
    power = rad
    for _ in range(max_power):
        dims.append(power.dim)
        power = ideal_product(power, rad)
    return dims


def loewy_length(algebra: Algebra) -> int:
    """Smallest k with rad^k = 0."""
    rad = radical(algebra)
    power, k = whole_ideal(algebra), 0
    while power.dim:
        power = ideal_product(power, rad)
        k += 1
    return k


def quotient_projection(ideal: Ideal) -> np.ndarray:
    """Matrix of the quotient map A -> A/I in the complement coordinates."""
    return ideal.carrier.quotient_projection()


def quotient_algebra(algebra: Algebra, ideal: Ideal, name: str = "") -> Algebra:
    """A/I on the non-pivot basis elements of I.

    Distinguished idempotents with nonzero image survive, with their labels.
    """
    if ideal.parent.key != algebra.key:
        raise ParentMismatchError(f"Ideal does not belong to {algebra!r}")
    if not ideal.is_proper():
        raise ImproperIdealError(f"Ideal of dimension {ideal.dim} contains the unit of {algebra!r}")
    fld = algebra.field
    comp = ideal.carrier.complement_coordinates
    proj = quotient_projection(ideal)
    structure = fld.reduce(algebra.structure[np.ix_(comp, comp)] @ proj.T)
    unit = fld.matmul(proj, algebra.unit)
    idems, labels = [], []
    for e, label in zip(algebra.idempotents, algebra.idempotent_labels):
        image = fld.matmul(proj, e)
        if not fld.is_zero(image):
            idems.append(image)
            labels.append(label)
    quotient = Algebra.build(
        fld,
        structure,
        unit,
        [algebra.labels[c] for c in comp],
        idems,
        labels,
        name=name or (f"{algebra.name}/I" if algebra.name else ""),
        check=False,
    )
    logger.debug(f"Quotient of {algebra!r} by ideal of dim {ideal.dim}: dim {quotient.dim}")
    return quotient


def span_of_products(algebra: Algebra, left: Sequence[np.ndarray], right: Sequence[np.ndarray]) -> Subspace:
    """span{x y} for x in ``left``, y in ``right``; used for e A f style subspaces."""
    fld = algebra.field
    xs = stack_rows(fld, list(left), algebra.dim)
    ys = stack_rows(fld, list(right), algebra.dim)
    if xs.shape[0] == 0 or ys.shape[0] == 0:
        return Subspace.zero(fld, algebra.dim)
    return Subspace.from_matrix(fld, algebra.mul_many(xs, ys))
