"""Hom spaces between modules.

Unknown maps are parametrized vertex by vertex: a homomorphism commutes with
the distinguished idempotents, so it is a sum of blocks e_i N <- e_i M. The
remaining intertwining conditions are imposed one generator at a time, which
keeps every linear system as small as the current solution space.
"""

import logging
from functools import lru_cache
from typing import List

import numpy as np

from linalg import FieldSpec, Subspace
from .module import Module, ModuleMap, check_same_algebra, column_space


logger = logging.getLogger(__name__)


def _block_parametrization(source: Module, target: Module) -> np.ndarray:
    """Candidate maps X_t (t, n, m) spanning all maps that commute with idempotents."""
    fld = source.field
    m, n = source.dim, target.dim
    alg = source.algebra
    if not alg.idempotents:
        basis = fld.zeros((n * m, n, m))
        for k in range(n * m):
            basis[k, k // m, k % m] = fld.scalar(1)
        return basis
    pieces: List[np.ndarray] = []
    for e in alg.idempotents:
        cols = column_space(fld, target.act(e), n)
        rows = column_space(fld, source.act(e).T, m)
        if cols.dim == 0 or rows.dim == 0:
            continue
        # outer products u_a w_b^T
        block = fld.reduce(np.einsum("an,bm->abnm", cols.basis, rows.basis)).reshape(-1, n, m)
        pieces.append(block)
    if not pieces:
        return fld.zeros((0, n, m))
    return np.concatenate(pieces)


def _hom_basis_uncached(source: Module, target: Module) -> np.ndarray:
    fld = source.field
    m, n = source.dim, target.dim
    if m == 0 or n == 0:
        return fld.zeros((0, n, m))
    candidates = _block_parametrization(source, target)
    alg = source.algebra
    for g in alg.nonidempotent_generators:
        if candidates.shape[0] == 0:
            break
        a = source.act(g)
        b = target.act(g)
        defect = fld.reduce(fld.matmul(candidates, a) - fld.matmul(b, candidates))
        flat = defect.reshape(candidates.shape[0], -1)
        if fld.is_zero(flat):
            continue
        coeffs = fld.nullspace(flat.T)
        candidates = fld.reduce(np.einsum("st,tnm->snm", coeffs, candidates))
    return _canonical(fld, candidates)


def _canonical(fld: FieldSpec, maps: np.ndarray) -> np.ndarray:
    """Reduced row-echelon basis of the span of the flattened maps."""
    k, n, m = maps.shape
    if k == 0:
        return maps
    sub = Subspace.from_matrix(fld, maps.reshape(k, n * m))
    return sub.basis.reshape(sub.dim, n, m)


@lru_cache(maxsize=8192)
def _hom_basis_cached(source: Module, target: Module) -> np.ndarray:
    basis = _hom_basis_uncached(source, target)
    basis.setflags(write=False)
    return basis


def hom_basis(source: Module, target: Module) -> np.ndarray:
    """Basis of Hom_A(source, target) as a (k, dim target, dim source) array."""
    check_same_algebra(source, target)
    return _hom_basis_cached(source, target)


def hom_space(source: Module, target: Module) -> List[ModuleMap]:
    return [ModuleMap(source, target, mat) for mat in hom_basis(source, target)]


def hom_dim(source: Module, target: Module) -> int:
    return hom_basis(source, target).shape[0]


def hom_subspace(source: Module, target: Module) -> Subspace:
    """Hom(source, target) as a subspace of flattened matrices."""
    fld = source.field
    basis = hom_basis(source, target)
    if basis.shape[0] == 0:
        return Subspace.zero(fld, target.dim * source.dim)
    return Subspace.from_matrix(fld, basis.reshape(basis.shape[0], -1))


def combine(fld: FieldSpec, basis: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    return fld.reduce(np.einsum("t,tnm->nm", coeffs, basis))


def random_hom(source: Module, target: Module, rng: np.random.Generator) -> ModuleMap:
    fld = source.field
    basis = hom_basis(source, target)
    if basis.shape[0] == 0:
        return ModuleMap(source, target, fld.zeros((target.dim, source.dim)))
    return ModuleMap(source, target, combine(fld, basis, fld.random(basis.shape[0], rng)))


def image_of_all(source: Module, target: Module) -> Subspace:
    """Sum of the images of every map source -> target."""
    fld = target.field
    basis = hom_basis(source, target)
    if basis.shape[0] == 0:
        return Subspace.zero(fld, target.dim)
    return Subspace.from_matrix(fld, basis.transpose(0, 2, 1).reshape(-1, target.dim))

