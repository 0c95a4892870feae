"""Finite-dimensional left modules given by action matrices."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from algebra import Algebra
from core.exceptions import AlgebraMismatchError, DimensionMismatchError, NotAModuleError
from linalg import FieldSpec, Subspace, stack_rows


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Module:
    """``action[i]`` is the m x m matrix of the basis element b_i on column vectors."""

    algebra: Algebra
    action: np.ndarray
    name: str = ""

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @cached_property
    def key(self) -> str:
        return self.field.digest(self.action) + self.algebra.key[:16]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Module):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        label = self.name or "M"
        return f"Module({label}, dim={self.dim}, over {self.algebra.name or 'A'})"

    def act(self, x: np.ndarray) -> np.ndarray:
        """Matrix of the algebra element with coordinates x."""
        return self.field.reduce(np.einsum("i,ijk->jk", x, self.action))

    def act_many(self, xs: np.ndarray) -> np.ndarray:
        return self.field.reduce(np.einsum("ai,ijk->ajk", xs, self.action))

    def check(self) -> None:
        """Unital algebra homomorphism into m x m matrices."""
        fld, alg = self.field, self.algebra
        if self.action.shape != (alg.dim, self.dim, self.dim):
            raise NotAModuleError(f"Action has shape {self.action.shape}, algebra dim {alg.dim}")
        if not np.array_equal(self.act(alg.unit), fld.eye(self.dim)):
            raise NotAModuleError("The unit does not act as the identity")
        lhs = fld.reduce(np.einsum("iab,jbc->ijac", self.action, self.action))
        rhs = fld.reduce(np.einsum("ijk,kac->ijac", alg.structure, self.action))
        if not np.array_equal(lhs, rhs):
            raise NotAModuleError(f"{self!r}: action is not multiplicative")

    def idempotent_ranks(self) -> Tuple[int, ...]:
        return tuple(self.field.rank(self.act(e)) for e in self.algebra.idempotents)


def dimension_vector(module: Module) -> Tuple[int, ...]:
    return module.idempotent_ranks()


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """``matrix`` is dim(target) x dim(source)."""

    source: Module
    target: Module
    matrix: np.ndarray

    def check(self) -> None:
        fld = self.source.field
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatchError(f"Map matrix has shape {self.matrix.shape}")
        left = fld.reduce(np.einsum("ab,ibc->iac", self.matrix, self.source.action))
        right = fld.reduce(np.einsum("iab,bc->iac", self.target.action, self.matrix))
        if not np.array_equal(left, right):
            raise NotAModuleError("Matrix does not intertwine the actions")

    def compose(self, first: "ModuleMap") -> "ModuleMap":
        """self ∘ first."""
        return ModuleMap(first.source, self.target, self.source.field.matmul(self.matrix, first.matrix))

    @property
    def rank(self) -> int:
        return self.source.field.rank(self.matrix) if self.matrix.size else 0

    def image(self) -> Subspace:
        return column_space(self.source.field, self.matrix, self.target.dim)

    def kernel(self) -> Subspace:
        fld = self.source.field
        if self.target.dim == 0:
            return Subspace.whole(fld, self.source.dim)
        return Subspace.from_matrix(fld, fld.nullspace(self.matrix))


def column_space(fld: FieldSpec, matrix: np.ndarray, ambient: int) -> Subspace:
    if matrix.size == 0:
        return Subspace.zero(fld, ambient)
    return Subspace.from_matrix(fld, matrix.T)


def check_same_algebra(*modules: Module) -> None:
    keys = {m.algebra.key for m in modules}
    if len(keys) > 1:
        raise AlgebraMismatchError(f"Modules over different algebras: {[m.algebra for m in modules]}")


def identity_map(module: Module) -> ModuleMap:
    return ModuleMap(module, module, module.field.eye(module.dim))


def zero_module(algebra: Algebra) -> Module:
    return Module(algebra, algebra.field.zeros((algebra.dim, 0, 0)), "0")


def regular_module(algebra: Algebra) -> Module:
    """A acting on itself by left multiplication."""
    return Module(algebra, algebra.regular_action, f"{algebra.name or 'A'}")


def submodule(module: Module, sub: Subspace, name: str = "", check: bool = False) -> Module:
    """Action restricted to an invariant subspace, in its canonical basis."""
    fld = module.field
    if sub.dim == 0:
        return zero_module(module.algebra)
    basis_t = sub.basis.T
    images = fld.reduce(np.einsum("iab,bc->iac", module.action, basis_t))
    action = np.ascontiguousarray(images[:, list(sub.pivots), :])
    if check:
        for mat in images.transpose(0, 2, 1).reshape(-1, module.dim):
            if not sub.contains(mat):
                raise NotAModuleError("Subspace is not invariant under the action")
    return Module(module.algebra, action, name)


def inclusion_map(module: Module, sub: Subspace, sub_module: Optional[Module] = None) -> ModuleMap:
    source = sub_module if sub_module is not None else submodule(module, sub)
    return ModuleMap(source, module, sub.basis.T.copy())


def quotient_module(module: Module, sub: Subspace, name: str = "") -> Module:
    fld = module.field
    proj = sub.quotient_projection()
    emb = sub.complement_embedding()
    action = fld.matmul(fld.matmul(proj, module.action), emb)
    return Module(module.algebra, np.ascontiguousarray(action), name)


def quotient_map(module: Module, sub: Subspace, quotient: Optional[Module] = None) -> ModuleMap:
    target = quotient if quotient is not None else quotient_module(module, sub)
    return ModuleMap(module, target, sub.quotient_projection())


def direct_sum(modules: Sequence[Module], name: str = "") -> Module:
    if not modules:
        raise DimensionMismatchError("Direct sum of an empty list needs an algebra; use zero_module")
    check_same_algebra(*modules)
    fld = modules[0].field
    total = sum(m.dim for m in modules)
    d = modules[0].algebra.dim
    action = fld.zeros((d, total, total))
    offset = 0
    for m in modules:
        action[:, offset:offset + m.dim, offset:offset + m.dim] = m.action
        offset += m.dim
    return Module(modules[0].algebra, action, name)


def direct_sum_maps(maps: Sequence[ModuleMap]) -> ModuleMap:
    """Block-diagonal sum of maps."""
    fld = maps[0].source.field
    source = direct_sum([f.source for f in maps])
    target = direct_sum([f.target for f in maps])
    matrix = fld.zeros((target.dim, source.dim))
    r = c = 0
    for f in maps:
        matrix[r:r + f.target.dim, c:c + f.source.dim] = f.matrix
        r += f.target.dim
        c += f.source.dim
    return ModuleMap(source, target, matrix)


def generated_submodule(module: Module, vectors: Sequence[np.ndarray]) -> Subspace:
    """A·span(vectors) inside the module."""
    fld = module.field
    if not vectors or module.dim == 0:
        return Subspace.zero(fld, module.dim)
    vecs = stack_rows(fld, list(vectors), module.dim)
    images = fld.reduce(np.einsum("iab,kb->ika", module.action, vecs)).reshape(-1, module.dim)
    return Subspace.from_matrix(fld, images)


def radical_subspace(module: Module) -> Subspace:
    """rad(A)·M."""
    fld = module.field
    rad = module.algebra.radical
    if rad.dim == 0 or module.dim == 0:
        return Subspace.zero(fld, module.dim)
    mats = module.act_many(rad.basis)
    return Subspace.from_matrix(fld, mats.transpose(0, 2, 1).reshape(-1, module.dim))


def radical_submodule(module: Module) -> Module:
    return submodule(module, radical_subspace(module), f"rad {module.name}".strip())


def top(module: Module) -> Module:
    """M / rad(A)M."""
    return quotient_module(module, radical_subspace(module), f"top {module.name}".strip())


def socle_subspace(module: Module) -> Subspace:
    """Vectors annihilated by the radical."""
    fld = module.field
    rad = module.algebra.radical
    if rad.dim == 0 or module.dim == 0:
        return Subspace.whole(fld, module.dim)
    stacked = module.act_many(rad.basis).reshape(-1, module.dim)
    return Subspace.from_matrix(fld, fld.nullspace(stacked)) if stacked.shape[0] else Subspace.whole(fld, module.dim)


def vertex_subspace(module: Module, vertex: int) -> Subspace:
    """e_i M."""
    return column_space(module.field, module.act(module.algebra.idempotents[vertex]), module.dim)


def indecomposable_projectives(algebra: Algebra) -> List[Module]:
    """P_i = A e_i as submodules of the regular module."""
    reg = regular_module(algebra)
    fld = algebra.field
    result = []
    for label, e in zip(algebra.idempotent_labels, algebra.idempotents):
        sub = column_space(fld, algebra.right_matrix(e), algebra.dim)
        result.append(submodule(reg, sub, f"P{label}"))
    return result


def simple_modules(algebra: Algebra) -> List[Module]:
    """S_i = top(P_i) for the distinguished idempotents."""
    simples = []
    for label, proj in zip(algebra.idempotent_labels, indecomposable_projectives(algebra)):
        s = top(proj)
        simples.append(Module(algebra, s.action, f"S{label}"))
    return simples


def random_quotient_of_free(
    algebra: Algebra, copies: int, relation_count: int, rng: np.random.Generator
) -> Module:
    """A^copies modulo the submodule generated by random vectors."""
    free = direct_sum([regular_module(algebra)] * copies)
    vectors = [algebra.field.random(free.dim, rng) for _ in range(relation_count)]
    return quotient_module(free, generated_submodule(free, vectors))
