"""Trace radicals, duals, twists and pushout extensions."""

import logging
from typing import List, Sequence

import numpy as np

from algebra import Algebra, opposite
from core.exceptions import AlgebraMismatchError
from linalg import Subspace
from .hom import hom_basis, image_of_all
from .module import Module, ModuleMap, check_same_algebra, direct_sum, quotient_module, submodule
from .resolution import first_syzygy, projective_cover


logger = logging.getLogger(__name__)


def trace_radical(generators: Sequence[Module], module: Module) -> Subspace:
    """Sum of the images of all maps from the generators into the module."""
    check_same_algebra(module, *generators)
    total = Subspace.zero(module.field, module.dim)
    for gen in generators:
        if gen.dim:
            total = total.sum(image_of_all(gen, module))
    return total


def trace_submodule(generators: Sequence[Module], module: Module) -> Module:
    return submodule(module, trace_radical(generators, module))


def dual_module(module: Module) -> Module:
    """D(M) = Hom_k(M, k) over the opposite algebra: transposed actions."""
    action = np.ascontiguousarray(module.action.transpose(0, 2, 1))
    return Module(opposite(module.algebra), action, f"D({module.name})" if module.name else "")


def dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(dual_module(f.target), dual_module(f.source), f.matrix.T.copy())


def twist(module: Module, target_algebra: Algebra, images: np.ndarray) -> Module:
    """Restriction of scalars along an algebra map.

    ``images[i]`` holds the coordinates in ``module.algebra`` of the image of
    the i-th basis element of ``target_algebra``.
    """
    if images.shape != (target_algebra.dim, module.algebra.dim):
        raise AlgebraMismatchError(f"Algebra map has shape {images.shape}")
    action = module.act_many(images)
    return Module(target_algebra, np.ascontiguousarray(action), module.name)


def pushout(f: ModuleMap, g: ModuleMap) -> Module:
    """Pushout of X <- K -> Y, i.e. (X ⊕ Y) / {(f(k), -g(k))}."""
    fld = f.source.field
    total = direct_sum([f.target, g.target])
    rows = np.concatenate([f.matrix, fld.reduce(-g.matrix)], axis=0).T
    relations = Subspace.from_matrix(fld, rows) if rows.shape[0] else Subspace.zero(fld, total.dim)
    return quotient_module(total, relations)


def pushout_extension(cocycle: ModuleMap, cover_kernel_inclusion: ModuleMap) -> Module:
    """Middle term of the extension of Y by X given by h: ΩY -> X."""
    return pushout(cocycle, cover_kernel_inclusion)


def extension_middle_terms(end: Module, start: Module) -> List[Module]:
    """Middle terms E of 0 -> start -> E -> end -> 0 for a spanning set of Ext^1(end, start).

    Hom(ΩY, X) surjects onto Ext^1(Y, X); its basis yields every class up to
    the restrictions of maps P -> X, which give split sequences.
    """
    cover = projective_cover(end)
    omega = first_syzygy(end)
    if omega.dim == 0:
        return []
    fld = end.field
    inclusion = ModuleMap(omega, cover.projective, cover.kernel.basis.T.copy())
    restrictions = hom_basis(cover.projective, start)
    restricted = (
        fld.matmul(restrictions, inclusion.matrix).reshape(restrictions.shape[0], -1)
        if restrictions.shape[0]
        else fld.zeros((0, start.dim * omega.dim))
    )
    split_part = Subspace.from_matrix(fld, restricted) if restricted.shape[0] else Subspace.zero(
        fld, start.dim * omega.dim
    )
    terms = []
    for h in hom_basis(omega, start):
        if split_part.contains(h.reshape(-1)):
            continue
        terms.append(pushout_extension(ModuleMap(omega, start, h), inclusion))
        split_part = split_part.sum(Subspace.span(fld, start.dim * omega.dim, [h.reshape(-1)]))
    return terms
