"""Gorenstein-projective modules and the functor Hom(P_{v,w}, -).

End(P) multiplies by composition, so Hom(P, X) is a right End(P)-module
under precomposition and a left module over End(P)^op.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from algebra import Algebra, opposite
from linalg import Subspace
from modcat import (
    DEFAULT_CUTOFF,
    Module,
    basic_generator,
    direct_sum,
    endomorphism_ring,
    ext,
    hom_basis,
    hom_dim,
    hom_subspace,
    regular_module,
    submodule,
    summand_algebra,
)
from preproj import FrobeniusCategory
from .dimensions import virtual_dimension


logger = logging.getLogger(__name__)


def gp_membership(algebra: Algebra, module: Module, d: Optional[int] = None,
                  cutoff: int = DEFAULT_CUTOFF) -> bool:
    """Ext^i(M, A) = 0 for 1 <= i <= virdim A."""
    d = virtual_dimension(algebra, cutoff) if d is None else d
    target = regular_module(module.algebra)
    return all(ext(module, target, i, max(cutoff, d)) == 0 for i in range(1, d + 1))


class HomFunctor:
    """F = Hom(G, -) into modules over End(G)^op for the basic part G of P_{v,w}."""

    def __init__(self, generator: Module, rng: Optional[np.random.Generator] = None):
        self.generator, pieces = basic_generator(generator, rng)
        self.ring = endomorphism_ring(self.generator)
        self.endomorphisms = summand_algebra(self.generator, pieces, "End(P)")
        self.algebra = opposite(self.endomorphisms)

    def apply(self, module: Module) -> Module:
        fld = module.field
        basis = hom_basis(self.generator, module)
        h = basis.shape[0]
        sub = hom_subspace(self.generator, module)
        action = fld.zeros((self.algebra.dim, h, h))
        for i, f in enumerate(self.ring.maps):
            for j, phi in enumerate(basis):
                action[i, :, j] = sub.coordinates(fld.matmul(phi, f).reshape(-1))
        return Module(self.algebra, action, f"F({module.name})" if module.name else "")

    def on_maps(self, source: Module, target: Module) -> np.ndarray:
        """F(g) for a basis of Hom(source, target), as a (k, hom(G,Y), hom(G,X)) array."""
        fld = source.field
        maps = hom_basis(source, target)
        src = hom_basis(self.generator, source)
        dst = hom_subspace(self.generator, target)
        out = fld.zeros((maps.shape[0], dst.dim, src.shape[0]))
        for a, g in enumerate(maps):
            for j, phi in enumerate(src):
                out[a, :, j] = dst.coordinates(fld.matmul(g, phi).reshape(-1))
        return out


@dataclass
class GPEquivalenceReport:
    pair: str
    seed: int
    samples: int
    virtual_dimension: Optional[int] = None
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _full_faithfulness(functor: HomFunctor, x: Module, y: Module) -> Optional[str]:
    fld = x.field
    images = functor.on_maps(x, y)
    k = images.shape[0]
    rank = fld.rank(images.reshape(k, -1)) if k and images[0].size else 0
    if rank != k:
        return f"Hom(X, Y) -> Hom(FX, FY) has rank {rank} < {k}"
    target = hom_dim(functor.apply(x), functor.apply(y))
    if target != k:
        return f"dim Hom(FX, FY) = {target} != dim Hom(X, Y) = {k}"
    return None


def _exactness(cat: FrobeniusCategory, functor: HomFunctor, x: Module) -> Optional[str]:
    """0 -> K -> P^h -> X -> 0 from all maps P -> X stays exact under F."""
    fld = x.field
    maps = hom_basis(functor.generator, x)
    if maps.shape[0] == 0:
        return None if x.dim == 0 else "X is not generated by P"
    cover = direct_sum([functor.generator] * maps.shape[0])
    matrix = np.concatenate(list(maps), axis=1)
    if fld.rank(matrix) != x.dim:
        return "maps from P do not cover X"
    kernel = submodule(cover, Subspace.from_matrix(fld, fld.nullspace(matrix)))
    if not cat.contains(kernel):
        return "kernel of the P-cover leaves C_{v,w}"
    lhs = hom_dim(functor.generator, cover)
    rhs = hom_dim(functor.generator, kernel) + hom_dim(functor.generator, x)
    if lhs != rhs:
        return f"F(0 -> K -> P^h -> X -> 0) is not exact: {lhs} != {rhs}"
    return None


def gp_equivalence_check(cat: FrobeniusCategory, sample_count: int, seed: int,
                         cutoff: int = DEFAULT_CUTOFF) -> GPEquivalenceReport:
    """Hom(P_{v,w}, -) lands in GP(Π_{v,w}), is fully faithful and exact on samples."""
    report = GPEquivalenceReport(repr(cat), seed, sample_count)
    if cat.generator.dim == 0:
        return report
    functor = HomFunctor(cat.generator)
    d = virtual_dimension(functor.algebra, cutoff)
    report.virtual_dimension = d
    samples = [cat.generator] + cat.sample_modules(sample_count)
    for k, x in enumerate(samples):
        fx = functor.apply(x)
        if fx.dim and not gp_membership(functor.algebra, fx, d, cutoff):
            report.failures.append(f"seed {seed} sample {k}: F(X) is not Gorenstein-projective")
        problem = _exactness(cat, functor, x)
        if problem:
            report.failures.append(f"seed {seed} sample {k}: {problem}")
        y = samples[(k + 1) % len(samples)]
        problem = _full_faithfulness(functor, x, y)
        if problem:
            report.failures.append(f"seed {seed} samples {k},{(k + 1) % len(samples)}: {problem}")
    logger.info(f"{report.pair}: GP check on {len(samples)} modules, {len(report.failures)} failures")
    return report
