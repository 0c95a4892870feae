"""Endomorphism algebras, Krull-Schmidt decomposition and isomorphism tests."""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from algebra import Algebra, primitive_idempotents
from core.exceptions import IsoNotVerified, ModuleError
from linalg import Subspace
from .hom import combine, hom_basis, hom_dim
from .module import Module, check_same_algebra, column_space, dimension_vector, direct_sum, submodule


logger = logging.getLogger(__name__)

DEFAULT_ISO_ATTEMPTS = 32


class IsoVerdict(Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not_isomorphic"
    NOT_VERIFIED = "not_verified"


@dataclass(frozen=True, eq=False)
class EndomorphismRing:
    """End(M) with basis ``maps`` and product f·g = f ∘ g."""

    module: Module
    maps: np.ndarray
    algebra: Algebra

    def element_matrix(self, coords: np.ndarray) -> np.ndarray:
        return combine(self.module.field, self.maps, coords)

    def coordinates(self, matrix: np.ndarray) -> np.ndarray:
        """Coordinates of an endomorphism; the basis is in reduced echelon form."""
        return np.array(matrix.reshape(-1)[list(_pivots(self.maps))], dtype=self.module.field.dtype)


def _pivots(maps: np.ndarray) -> Tuple[int, ...]:
    flat = maps.reshape(maps.shape[0], -1)
    return tuple(int(np.nonzero(row != 0)[0][0]) for row in flat)


@lru_cache(maxsize=1024)
def endomorphism_ring(module: Module) -> EndomorphismRing:
    if module.dim == 0:
        raise ModuleError("End of the zero module has no unit")
    fld = module.field
    maps = hom_basis(module, module)
    k = maps.shape[0]
    pivots = list(_pivots(maps))
    flat = maps.reshape(k, -1)
    products = fld.matmul(maps[:, None], maps[None, :]).reshape(k, k, -1)
    # maps are in reduced echelon form, so coordinates are the pivot entries
    structure = np.ascontiguousarray(products[:, :, pivots])
    unit = fld.eye(module.dim).reshape(-1)[pivots]
    if not np.array_equal(fld.matmul(unit, flat), fld.eye(module.dim).reshape(-1)):
        raise ModuleError("Identity map is not in the computed endomorphism basis")
    algebra = Algebra.build(
        fld, structure, unit, [f"f{i}" for i in range(k)], name=f"End({module.name or 'M'})", check=False
    )
    return EndomorphismRing(module, maps, algebra)


def endomorphism_algebra(module: Module) -> Algebra:
    return endomorphism_ring(module).algebra


def summand_subspaces(module: Module, rng: Optional[np.random.Generator] = None) -> List[Subspace]:
    """Images of a complete set of primitive idempotents of End(M)."""
    if module.dim == 0:
        return []
    ring = endomorphism_ring(module)
    idems = primitive_idempotents(ring.algebra, rng if rng is not None else np.random.default_rng(0))
    return [column_space(module.field, ring.element_matrix(e), module.dim) for e in idems]


def indecomposable_summands(module: Module, rng: Optional[np.random.Generator] = None) -> List[Module]:
    return [submodule(module, sub) for sub in summand_subspaces(module, rng)]


def is_isomorphic_indecomposable(x: Module, y: Module) -> bool:
    """Deterministic test for indecomposables: some g_a ∘ f_b is invertible.

    End(X) is local, so the non-invertible endomorphisms form a subspace; if
    every product of basis maps lies in it, so does every composite.
    """
    check_same_algebra(x, y)
    if x.dim != y.dim:
        return False
    if dimension_vector(x) != dimension_vector(y):
        return False
    fld = x.field
    forward = hom_basis(x, y)
    backward = hom_basis(y, x)
    if forward.shape[0] == 0 or backward.shape[0] == 0:
        return False
    composites = fld.matmul(backward[:, None], forward[None, :]).reshape(-1, x.dim, x.dim)
    return any(fld.rank(c) == x.dim for c in composites)


def decompose(module: Module, rng: Optional[np.random.Generator] = None) -> List[Tuple[Module, int]]:
    """Indecomposable summands up to isomorphism, with multiplicities."""
    classes: List[List[Module]] = []
    for piece in indecomposable_summands(module, rng):
        for group in classes:
            if is_isomorphic_indecomposable(group[0], piece):
                group.append(piece)
                break
        else:
            classes.append([piece])
    result = [(group[0], len(group)) for group in classes]
    result.sort(key=lambda item: (item[0].dim, dimension_vector(item[0])))
    logger.debug(f"Decomposed {module!r} into {[(m.dim, k) for m, k in result]}")
    return result


def basic_part(module: Module, rng: Optional[np.random.Generator] = None) -> List[Module]:
    """One representative per isomorphism class of indecomposable summands."""
    return [m for m, _ in decompose(module, rng)]


def is_isomorphic(
    x: Module,
    y: Module,
    attempts: int = DEFAULT_ISO_ATTEMPTS,
    rng: Optional[np.random.Generator] = None,
) -> IsoVerdict:
    """Invariants first, then seeded random combinations of Hom(X, Y)."""
    check_same_algebra(x, y)
    if x.dim != y.dim or dimension_vector(x) != dimension_vector(y):
        return IsoVerdict.NOT_ISOMORPHIC
    if x.dim == 0:
        return IsoVerdict.ISOMORPHIC
    end_x = hom_dim(x, x)
    if end_x != hom_dim(y, y) or end_x != hom_dim(x, y) or end_x != hom_dim(y, x):
        return IsoVerdict.NOT_ISOMORPHIC
    fld = x.field
    rng = rng if rng is not None else np.random.default_rng(0)
    basis = hom_basis(x, y)
    for _ in range(attempts):
        candidate = combine(fld, basis, fld.random(basis.shape[0], rng))
        if fld.rank(candidate) == x.dim:
            return IsoVerdict.ISOMORPHIC
    logger.warning(f"Isomorphism {x!r} ~ {y!r} not verified after {attempts} attempts")
    return IsoVerdict.NOT_VERIFIED


def require_isomorphic(x: Module, y: Module, attempts: int = DEFAULT_ISO_ATTEMPTS,
                       rng: Optional[np.random.Generator] = None) -> bool:
    """True/False, raising IsoNotVerified when the search is inconclusive."""
    verdict = is_isomorphic(x, y, attempts, rng)
    if verdict is IsoVerdict.NOT_VERIFIED:
        raise IsoNotVerified(f"Could not verify {x!r} ≅ {y!r}")
    return verdict is IsoVerdict.ISOMORPHIC


def find_isomorphism(x: Module, y: Module, attempts: int = DEFAULT_ISO_ATTEMPTS,
                     rng: Optional[np.random.Generator] = None) -> Optional[np.ndarray]:
    """An invertible intertwiner X -> Y, if the random search finds one."""
    if x.dim != y.dim:
        return None
    fld = x.field
    rng = rng if rng is not None else np.random.default_rng(0)
    basis = hom_basis(x, y)
    if x.dim == 0:
        return fld.zeros((0, 0))
    if basis.shape[0] == 0:
        return None
    for _ in range(attempts):
        candidate = combine(fld, basis, fld.random(basis.shape[0], rng))
        if fld.rank(candidate) == x.dim:
            return candidate
    return None


def same_multiset(left: Sequence[Module], right: Sequence[Module]) -> bool:
    """Equality of multisets of indecomposables up to isomorphism."""
    if len(left) != len(right):
        return False
    unused = list(right)
    for piece in left:
        for k, other in enumerate(unused):
            if is_isomorphic_indecomposable(piece, other):
                del unused[k]
                break
        else:
            return False
    return True


def same_additive_closure(x: Module, y: Module, rng: Optional[np.random.Generator] = None) -> bool:
    """add(X) = add(Y): same indecomposable summands up to isomorphism."""
    return same_multiset(basic_part(x, rng), basic_part(y, rng))


def summand_count(module: Module, rng: Optional[np.random.Generator] = None) -> int:
    """Number of pairwise non-isomorphic indecomposable summands."""
    return len(decompose(module, rng))


def basic_generator(module: Module, rng: Optional[np.random.Generator] = None) -> Tuple[Module, List[Module]]:
    """Direct sum of one copy of each indecomposable summand, and the summands."""
    pieces = basic_part(module, rng)
    if not pieces:
        raise ModuleError("Basic part of the zero module")
    return direct_sum(pieces, module.name), pieces


def basic_endomorphism_algebra(
    module: Module, rng: Optional[np.random.Generator] = None, name: str = ""
) -> Algebra:
    """End of the basic part of M, with the summand identities as idempotents."""
    total, pieces = basic_generator(module, rng)
    return summand_algebra(total, pieces, name)


def summand_algebra(total: Module, pieces: Sequence[Module], name: str = "") -> Algebra:
    """End(total) for total = ⊕ pieces; basis as in endomorphism_ring(total)."""
    ring = endomorphism_ring(total)
    fld = total.field
    idems = []
    offset = 0
    for piece in pieces:
        block = fld.zeros((total.dim, total.dim))
        for k in range(offset, offset + piece.dim):
            block[k, k] = fld.scalar(1)
        idems.append(ring.coordinates(block))
        offset += piece.dim
    algebra = ring.algebra.with_idempotents(idems, [str(i + 1) for i in range(len(pieces))])
    return replace(algebra, name=name) if name else algebra
