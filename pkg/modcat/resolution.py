"""Projective covers, syzygies, Ext and projective dimension.

All of these assume a split basic algebra with distinguished primitive
idempotents; modules over an algebra without them are rebased first.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from algebra import Algebra, require_basic
from core.exceptions import CutoffExceeded, ModuleError
from linalg import Subspace
from .hom import hom_dim
from .module import (
    Module,
    ModuleMap,
    direct_sum,
    indecomposable_projectives,
    radical_subspace,
    submodule,
    vertex_subspace,
    zero_module,
)


logger = logging.getLogger(__name__)

DEFAULT_CUTOFF = 12

_PROJECTIVES: Dict[str, List[Module]] = {}


@dataclass(frozen=True, eq=False)
class ProjectiveCover:
    projective: Module
    cover_map: ModuleMap
    vertices: Tuple[int, ...]

    @property
    def kernel(self) -> Subspace:
        return self.cover_map.kernel()


def with_vertices(module: Module) -> Module:
    """The same module over a copy of its algebra carrying primitive idempotents."""
    alg = require_basic(module.algebra)
    if alg is module.algebra:
        return module
    return Module(alg, module.action, module.name)


def projectives_of(algebra: Algebra) -> List[Module]:
    if algebra.key not in _PROJECTIVES:
        _PROJECTIVES[algebra.key] = indecomposable_projectives(algebra)
    return _PROJECTIVES[algebra.key]


@lru_cache(maxsize=4096)
def projective_cover(module: Module) -> ProjectiveCover:
    """Minimal projective cover: one P_i per top basis vector in e_i M."""
    module = with_vertices(module)
    alg, fld = module.algebra, module.field
    if module.dim == 0:
        zero = zero_module(alg)
        return ProjectiveCover(zero, ModuleMap(zero, module, fld.zeros((0, 0))), ())
    span = radical_subspace(module)
    chosen: List[Tuple[int, np.ndarray]] = []
    for i in range(len(alg.idempotents)):
        for u in vertex_subspace(module, i).basis:
            if not span.contains(u):
                chosen.append((i, u))
                span = span.sum(Subspace.span(fld, module.dim, [u]))
    projectives = projectives_of(alg)
    pieces = [projectives[i] for i, _ in chosen]
    cover = direct_sum(pieces, "P")
    columns = []
    for (i, u), piece in zip(chosen, pieces):
        elements = _projective_elements(alg, i, piece)
        columns.append(fld.matmul(module.act_many(elements), u).T)
    matrix = np.concatenate(columns, axis=1)
    cover_map = ModuleMap(cover, module, matrix)
    kernel = cover_map.kernel()
    if not radical_subspace(cover).contains_subspace(kernel):
        raise ModuleError(f"Projective cover of {module!r} is not minimal")
    logger.debug(f"Cover of {module!r}: vertices {[i for i, _ in chosen]}, kernel dim {kernel.dim}")
    return ProjectiveCover(cover, cover_map, tuple(i for i, _ in chosen))


_ELEMENTS: Dict[Tuple[str, int], np.ndarray] = {}


def _projective_elements(algebra: Algebra, vertex: int, piece: Module) -> np.ndarray:
    """Algebra elements forming the canonical basis of A e_i."""
    key = (algebra.key, vertex)
    if key not in _ELEMENTS:
        fld = algebra.field
        sub = Subspace.from_matrix(fld, algebra.right_matrix(algebra.idempotents[vertex]).T)
        _ELEMENTS[key] = sub.basis
    return _ELEMENTS[key]


def first_syzygy(module: Module) -> Module:
    cover = projective_cover(module)
    return submodule(cover.projective, cover.kernel, f"Ω({module.name})" if module.name else "")


def syzygy(module: Module, i: int, cutoff: int = DEFAULT_CUTOFF) -> Module:
    """Ω^i(M); Ω^0(M) = M."""
    if i > cutoff:
        raise CutoffExceeded(f"Syzygy index {i} exceeds cutoff {cutoff}")
    current = with_vertices(module)
    for _ in range(i):
        if current.dim == 0:
            break
        current = first_syzygy(current)
    return current


def top_multiplicities(module: Module) -> Tuple[int, ...]:
    """Multiplicity of each P_i in the projective cover."""
    cover = projective_cover(module)
    counts = [0] * len(cover.projective.algebra.idempotents)
    for i in cover.vertices:
        counts[i] += 1
    return tuple(counts)


def ext(source: Module, target: Module, i: int, cutoff: int = DEFAULT_CUTOFF) -> int:
    """dim Ext^i(source, target) from a minimal projective resolution of the source.

    With 0 -> ΩK -> P -> K -> 0 and K = Ω^{i-1}(source),
    dim Ext^i = hom(ΩK, N) - hom(P, N) + hom(K, N).
    """
    if i > cutoff:
        raise CutoffExceeded(f"Ext degree {i} exceeds cutoff {cutoff}")
    source, target = with_vertices(source), with_vertices(target)
    if i == 0:
        return hom_dim(source, target)
    k = syzygy(source, i - 1, cutoff)
    if k.dim == 0:
        return 0
    cover = projective_cover(k)
    omega = first_syzygy(k)
    hom_p = sum(target.field.rank(target.act(target.algebra.idempotents[v])) for v in cover.vertices)
    return hom_dim(omega, target) - hom_p + hom_dim(k, target)


def projective_dimension(module: Module, cutoff: int = DEFAULT_CUTOFF) -> int:
    """Smallest k with Ω^{k+1}(M) = 0; the zero module gets 0."""
    current = with_vertices(module)
    for k in range(cutoff + 1):
        nxt = first_syzygy(current)
        if nxt.dim == 0:
            return k
        current = nxt
    raise CutoffExceeded(f"Projective dimension of {module!r} exceeds cutoff {cutoff}")


def is_projective(module: Module) -> bool:
    return first_syzygy(with_vertices(module)).dim == 0
