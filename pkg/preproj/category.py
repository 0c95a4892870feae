"""The category C_{v,w}, its projective generator and the rings attached to it.

With t and f the torsion and torsion-free functors of the index convention,

    P_{v,w} = f_v t_w(Π),   add P_{v,w} = add t_w f_v(Π),

Π_{v,w} = End(P_{v,w}), Π_w = End(t_w Π), Π^v = End(f_v Π) and Λ_w = Π/I_w.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, List, Optional, Tuple

import numpy as np

from algebra import Algebra, opposite, quotient_algebra
from core.exceptions import IsoNotVerified, MembershipError, TorsionError
from linalg import Subspace
from modcat import (
    Module,
    ModuleMap,
    basic_endomorphism_algebra,
    dual_module,
    find_isomorphism,
    hom_basis,
    hom_dim,
    quotient_module,
    random_quotient_of_free,
    regular_module,
    require_isomorphic,
    same_additive_closure,
    submodule,
    trace_radical,
)
from modcat.decompose import DEFAULT_ISO_ATTEMPTS
from weyl import WeylElement, format_word, identity, longest_element, reduced_word
from .convention import DEFAULT_CONVENTION, check_convention
from .preprojective import PreprojectiveAlgebra
from .torsion import TorsionSplit, in_category, t_functor, torsion_ideal


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InducedMap:
    """A ring map between endomorphism rings, with its measured properties."""

    name: str
    source_dim: int
    target_dim: int
    rank: int
    kernel_matches_factoring: bool
    is_homomorphism: bool

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim

    @property
    def cokernel_dim(self) -> int:
        return self.target_dim - self.rank


@dataclass(frozen=True, eq=False)
class KernelCokernel:
    kernel: Module
    kernel_map: ModuleMap
    cokernel: Module
    cokernel_map: ModuleMap
    kernel_dim_by_trace: int


def _end_basis(module: Module) -> np.ndarray:
    return hom_basis(module, module)


def _coefficient_kernel(fld, images: np.ndarray) -> Subspace:
    """{c : Σ c_i images_i = 0} inside the coefficient space."""
    k = images.shape[0]
    if k == 0:
        return Subspace.zero(fld, 0)
    flat = images.reshape(k, int(np.prod(images.shape[1:])))
    if flat.shape[1] == 0:
        return Subspace.whole(fld, k)
    return Subspace.from_matrix(fld, fld.nullspace(flat.T))


def _left_inverse(fld, sub: Subspace) -> np.ndarray:
    """L with L @ sub.basis.T = I; the basis is in reduced echelon form."""
    left = fld.zeros((sub.dim, sub.ambient))
    for k, p in enumerate(sub.pivots):
        left[k, p] = fld.scalar(1)
    return left


def _measure(
    name: str,
    source_maps: np.ndarray,
    target: Module,
    apply: Callable[[np.ndarray], np.ndarray],
    factoring: np.ndarray,
) -> InducedMap:
    """Rank, kernel and multiplicativity of ``apply`` on a basis of End(source)."""
    fld = target.field
    k = source_maps.shape[0]
    target_dim = _end_basis(target).shape[0]
    images = np.stack([apply(g) for g in source_maps]) if k else fld.zeros((0, target.dim, target.dim))
    flat = images.reshape(k, target.dim * target.dim)
    rank = fld.rank(flat) if k and flat.shape[1] else 0
    kernel = _coefficient_kernel(fld, images)
    factor_kernel = _coefficient_kernel(fld, factoring)
    homomorphism = True
    if k:
        n = source_maps.shape[1]
        homomorphism = np.array_equal(apply(fld.eye(n)), fld.eye(target.dim))
        products = fld.matmul(source_maps[:, None], source_maps[None, :]).reshape(k * k, n, n)
        composed = fld.matmul(images[:, None], images[None, :]).reshape(k * k, target.dim, target.dim)
        for prod, expected in zip(products, composed):
            if not homomorphism:
                break
            homomorphism = np.array_equal(apply(prod), expected)
    result = InducedMap(name, k, target_dim, rank, kernel == factor_kernel, homomorphism)
    logger.debug(f"{name}: {k} -> {target_dim}, rank {rank}")
    return result


class FrobeniusCategory:
    """C_{v,w} for a pair of Weyl elements, with its objects built on demand."""

    def __init__(
        self,
        pi: PreprojectiveAlgebra,
        v: WeylElement,
        w: WeylElement,
        convention: str = DEFAULT_CONVENTION,
        rng: Optional[np.random.Generator] = None,
        iso_attempts: int = DEFAULT_ISO_ATTEMPTS,
    ):
        self.pi = pi
        self.v = v
        self.w = w
        self.convention = check_convention(convention)
        self.rng = rng if rng is not None else np.random.default_rng(0)
        self.iso_attempts = iso_attempts

    def __repr__(self) -> str:
        return (
            f"C[{format_word(reduced_word(self.v))} | {format_word(reduced_word(self.w))}]"
            f"({self.pi.dynkin.label}, {self.convention})"
        )

    # -- functors --------------------------------------------------------------

    def t_w(self, module: Module) -> TorsionSplit:
        return t_functor(self.pi, self.w, module, self.convention)

    def f_v(self, module: Module) -> TorsionSplit:
        """Split for C_v; the torsion-free part is ``.free``."""
        return t_functor(self.pi, self.v, module, self.convention)

    def contains(self, module: Module) -> bool:
        return in_category(self.pi, self.v, self.w, module, self.convention)

    def require_member(self, module: Module, role: str = "module") -> None:
        if not self.contains(module):
            raise MembershipError(f"{role} {module!r} is not in {self!r}")

    # -- objects ---------------------------------------------------------------

    @cached_property
    def regular(self) -> Module:
        return regular_module(self.pi.algebra)

    @cached_property
    def torsion_split(self) -> TorsionSplit:
        """Π -> t_w Π."""
        return self.t_w(self.regular)

    @cached_property
    def free_split(self) -> TorsionSplit:
        """Π -> f_v Π."""
        return self.f_v(self.regular)

    @cached_property
    def generator_split(self) -> TorsionSplit:
        """t_w Π -> f_v t_w Π."""
        return self.f_v(self.torsion_split.torsion)

    @cached_property
    def commuted_split(self) -> TorsionSplit:
        """t_w f_v Π -> f_v Π."""
        return self.t_w(self.free_split.free)

    @cached_property
    def generator(self) -> Module:
        """P_{v,w} = f_v t_w(Π)."""
        p = self.generator_split.free
        return Module(p.algebra, p.action, "P")

    @cached_property
    def commuted_generator(self) -> Module:
        return self.commuted_split.torsion

    def generators_agree(self) -> bool:
        """add f_v t_w(Π) = add t_w f_v(Π)."""
        return same_additive_closure(self.generator, self.commuted_generator, self.rng)

    def generators_isomorphic(self) -> bool:
        """f_v t_w(Π) ≅ t_w f_v(Π); raises IsoNotVerified when undecided."""
        return require_isomorphic(self.generator, self.commuted_generator, self.iso_attempts, self.rng)

    @cached_property
    def transport(self) -> Optional[np.ndarray]:
        """An isomorphism P_{v,w} -> t_w f_v(Π), or None when the two are not isomorphic."""
        if not self.generators_isomorphic():
            logger.debug(f"{self!r}: t_w f_v Π has other multiplicities than P_{{v,w}}")
            return None
        iso = find_isomorphism(self.generator, self.commuted_generator, self.iso_attempts, self.rng)
        if iso is None:
            raise IsoNotVerified(f"No isomorphism f_v t_w Π -> t_w f_v Π found for {self!r}")
        return iso

    # -- rings -----------------------------------------------------------------

    def pi_vw(self) -> Algebra:
        return basic_endomorphism_algebra(self.generator, self.rng, name="Pi_vw")

    def pi_w(self) -> Algebra:
        return basic_endomorphism_algebra(self.torsion_split.torsion, self.rng, name="Pi_w")

    def pi_upper_v(self) -> Algebra:
        return basic_endomorphism_algebra(self.free_split.free, self.rng, name="Pi^v")

    def lambda_w(self) -> Algebra:
        """Π/I_w with the raw ideal index."""
        return quotient_algebra(self.pi.algebra, torsion_ideal(self.pi, self.w).ideal, name="Lambda_w")

    # -- induced maps ----------------------------------------------------------

    def phi2(self) -> InducedMap:
        """End(t_w Π) -> End(P_{v,w}): pass to the quotient by t_v."""
        split = self.generator_split
        fld = split.module.field
        proj = split.projection.matrix
        section = split.subspace.complement_embedding()
        maps = _end_basis(split.module)
        factoring = fld.matmul(proj, maps) if maps.shape[0] else maps
        return _measure(
            "phi2", maps, self.generator, lambda g: fld.matmul(fld.matmul(proj, g), section), factoring
        )

    def tau1(self) -> InducedMap:
        """End(f_v Π) -> End(P_{v,w}): restrict to t_w and transport.

        When t_w f_v(Π) only shares add with P_{v,w} the map is measured into
        End(t_w f_v Π); rank and cokernel are invariant under the transport.
        """
        split = self.commuted_split
        fld = split.module.field
        incl = split.inclusion.matrix
        left = _left_inverse(fld, split.subspace)
        iso = self.transport
        target = self.generator if iso is not None else self.commuted_generator
        iso_inv = fld.inverse(iso) if iso is not None and iso.size else None
        maps = _end_basis(split.module)
        factoring = fld.matmul(maps, incl) if maps.shape[0] else maps

        def restrict(h: np.ndarray) -> np.ndarray:
            inner = fld.matmul(fld.matmul(left, h), incl)
            if iso_inv is None:
                return inner
            return fld.matmul(fld.matmul(iso_inv, inner), iso)

        return _measure("tau1", maps, target, restrict, factoring)

    def factoring_dims(self) -> Tuple[int, int]:
        """dim Hom(t_w Π, t_v t_w Π) and dim Hom(f_w f_v Π, f_v Π)."""
        tw = self.generator_split
        fv = self.commuted_split
        over_tv = hom_dim(tw.module, tw.torsion) if tw.torsion.dim else 0
        over_fw = hom_dim(fv.free, fv.module) if fv.free.dim else 0
        return over_tv, over_fw

    def induced_maps(self) -> Tuple[InducedMap, InducedMap]:
        return self.phi2(), self.tau1()

    # -- exact structure -------------------------------------------------------

    def kernel_cokernel(self, f: ModuleMap) -> KernelCokernel:
        """Kernel t_w(ker f) and cokernel f_v(coker f) of a map inside C_{v,w}."""
        self.require_member(f.source, "source")
        self.require_member(f.target, "target")
        fld = f.source.field
        ker = f.kernel()
        ker_module = submodule(f.source, ker)
        inner = self.t_w(ker_module)
        kernel_map = ModuleMap(inner.torsion, f.source, fld.matmul(ker.basis.T, inner.inclusion.matrix))
        image = f.image()
        coker_module = quotient_module(f.target, image)
        outer = self.f_v(coker_module)
        cokernel_map = ModuleMap(f.target, outer.free, fld.matmul(outer.projection.matrix, image.quotient_projection()))
        by_trace = trace_radical([self.generator], ker_module).dim if self.generator.dim else 0
        logger.debug(f"{self!r}: ker {inner.torsion.dim} (trace {by_trace}), coker {outer.free.dim}")
        return KernelCokernel(inner.torsion, kernel_map, outer.free, cokernel_map, by_trace)

    def kernel_universal(self, f: ModuleMap, test: Module) -> bool:
        """Every g: test -> X with f∘g = 0 factors through the kernel."""
        kc = self.kernel_cokernel(f)
        fld = f.source.field
        maps = hom_basis(test, f.source)
        if maps.shape[0] == 0:
            return True
        killed = _coefficient_kernel(fld, fld.matmul(f.matrix, maps))
        for coeffs in killed.basis:
            g = fld.reduce(np.tensordot(coeffs, maps, axes=1))
            if kc.kernel.dim == 0:
                if not fld.is_zero(g):
                    return False
                continue
            if fld.solve(kc.kernel_map.matrix, g) is None:
                return False
        return True

    # -- injectives ------------------------------------------------------------

    @cached_property
    def dual_regular(self) -> Module:
        """D(Π_Π), the injective cogenerator of mod Π."""
        dual = dual_module(regular_module(opposite(self.pi.algebra)))
        return Module(self.pi.algebra, dual.action, "D(Pi)")

    @cached_property
    def injectives(self) -> Module:
        """t_w f_v D(Π_Π)."""
        return self.t_w(self.f_v(self.dual_regular).free).torsion

    def is_frobenius(self) -> bool:
        """add(injectives) = add(P_{v,w})."""
        return same_additive_closure(self.injectives, self.generator, self.rng)

    # -- sampling --------------------------------------------------------------

    def sample_modules(self, count: int) -> List[Module]:
        """t_w f_v of seeded random quotients of free modules."""
        modules = []
        for _ in range(count):
            copies = int(self.rng.integers(1, 3))
            relations = int(self.rng.integers(1, 3))
            x = random_quotient_of_free(self.pi.algebra, copies, relations, self.rng)
            modules.append(self.t_w(self.f_v(x).free).torsion)
        return modules


def pvw(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement,
        convention: str = DEFAULT_CONVENTION) -> Module:
    """P_{v,w}, checked against t_w f_v(Π)."""
    cat = FrobeniusCategory(pi, v, w, convention)
    if not cat.generators_agree():
        raise TorsionError(f"add f_v t_w(Π) differs from add t_w f_v(Π) for {cat!r}")
    return cat.generator


def pi_vw(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement,
          convention: str = DEFAULT_CONVENTION) -> Algebra:
    return FrobeniusCategory(pi, v, w, convention).pi_vw()


def pi_w(pi: PreprojectiveAlgebra, w: WeylElement, convention: str = DEFAULT_CONVENTION) -> Algebra:
    return FrobeniusCategory(pi, identity(w.dynkin), w, convention).pi_w()


def pi_upper_v(pi: PreprojectiveAlgebra, v: WeylElement, convention: str = DEFAULT_CONVENTION) -> Algebra:
    return FrobeniusCategory(pi, v, longest_element(v.dynkin), convention).pi_upper_v()


def lambda_w(pi: PreprojectiveAlgebra, w: WeylElement) -> Algebra:
    return FrobeniusCategory(pi, w, w).lambda_w()


def induced_maps(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement,
                 convention: str = DEFAULT_CONVENTION) -> Tuple[InducedMap, InducedMap]:
    return FrobeniusCategory(pi, v, w, convention).induced_maps()


def kernel_cokernel_in_C(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement, f: ModuleMap,
                         convention: str = DEFAULT_CONVENTION) -> KernelCokernel:
    return FrobeniusCategory(pi, v, w, convention).kernel_cokernel(f)


def injectives_of_C(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement,
                    convention: str = DEFAULT_CONVENTION) -> Module:
    return FrobeniusCategory(pi, v, w, convention).injectives


def sample_module_in_C(pi: PreprojectiveAlgebra, v: WeylElement, w: WeylElement, rng: np.random.Generator,
                       convention: str = DEFAULT_CONVENTION) -> Module:
    return FrobeniusCategory(pi, v, w, convention, rng).sample_modules(1)[0]
