"""Tests for modules, Hom, Ext, syzygies and decomposition."""

import numpy as np
import pytest

from algebra import Arrow, Quiver, path_algebra_mod_relations, upper_triangular_algebra
from core.exceptions import AlgebraMismatchError, CutoffExceeded, NotAModuleError
from linalg import FieldSpec
from modcat import (
    IsoVerdict,
    Module,
    decompose,
    dimension_vector,
    direct_sum,
    dual_module,
    endomorphism_algebra,
    ext,
    find_isomorphism,
    hom_dim,
    indecomposable_projectives,
    is_isomorphic,
    is_projective,
    module_from_json,
    module_to_json,
    projective_dimension,
    radical_submodule,
    random_quotient_of_free,
    regular_module,
    same_additive_closure,
    simple_modules,
    summand_count,
    syzygy,
    top,
    trace_submodule,
)


def linear_a3_mod_path(fld):
    """k(1 -> 2 -> 3) modulo the path of length two."""
    quiver = Quiver(3, (Arrow(0, 1, "a"), Arrow(1, 2, "b")))
    return path_algebra_mod_relations(quiver, [((1, quiver.path([0, 1])),)], fld, name="A3/rad2")


def dual_numbers(fld):
    quiver = Quiver(1, (Arrow(0, 0, "x"),))
    return path_algebra_mod_relations(quiver, [((1, quiver.path([0, 0])),)], fld, name="k[x]/x^2")


class TestModules:
    """Test cases for projectives, simples and the module checks."""

    def setup_method(self):
        self.fld = FieldSpec()
        self.alg = upper_triangular_algebra(self.fld)
        self.p1, self.p2 = indecomposable_projectives(self.alg)
        self.s1, self.s2 = simple_modules(self.alg)

    def test_projective_dimensions(self):
        assert (self.p1.dim, self.p2.dim) == (2, 1)
        assert dimension_vector(self.p1) == (1, 1)
        assert dimension_vector(self.p2) == (0, 1)
        assert dimension_vector(self.s1) == (1, 0)

    def test_radical_and_top(self):
        assert radical_submodule(self.p1).dim == 1
        assert top(self.p1).dim == 1
        assert is_isomorphic(radical_submodule(self.p1), self.p2) is IsoVerdict.ISOMORPHIC

    def test_invalid_action(self):
        with pytest.raises(NotAModuleError):
            Module(self.alg, self.fld.zeros((3, 1, 1))).check()

    def test_random_quotient_is_a_module(self):
        module = random_quotient_of_free(self.alg, 2, 1, np.random.default_rng(3))
        module.check()
        assert module.dim == 3

    def test_dual_module(self):
        dual = dual_module(self.p1)
        dual.check()
        assert dual.dim == 2
        assert dimension_vector(dual) == (1, 1)

    def test_json_round_trip(self):
        again = module_from_json(module_to_json(self.p1), self.alg)
        assert again == self.p1

    def test_json_stores_generator_matrices_only(self):
        quiver = Quiver(3, (Arrow(0, 1, "a"), Arrow(1, 2, "b")))
        alg = path_algebra_mod_relations(quiver, [], self.fld, name="kA3")
        module = regular_module(alg)
        data = module_to_json(module)
        assert alg.dim == 6
        assert len(data["generators"]) == 5
        assert {entry[0] for entry in data["action"]} <= set(range(5))
        assert module_from_json(data, alg) == module

    def test_json_rejects_other_algebra(self):
        with pytest.raises(AlgebraMismatchError):
            module_from_json(module_to_json(self.p1), dual_numbers(self.fld))


class TestHomAndExt:
    """Test cases for Hom and Ext dimensions."""

    def setup_method(self):
        self.fld = FieldSpec()
        self.alg = upper_triangular_algebra(self.fld)
        self.p1, self.p2 = indecomposable_projectives(self.alg)
        self.s1, self.s2 = simple_modules(self.alg)

    def test_hom_from_projectives(self):
        assert hom_dim(self.p2, self.p1) == 1
        assert hom_dim(self.p1, self.p2) == 0
        assert hom_dim(regular_module(self.alg), regular_module(self.alg)) == 3

    def test_ext_between_simples(self):
        assert ext(self.s1, self.s2, 1) == 1
        assert ext(self.s2, self.s1, 1) == 0
        assert ext(self.s1, self.s1, 0) == 1

    def test_projectivity(self):
        assert is_projective(self.p1)
        assert is_projective(self.s2)
        assert not is_projective(self.s1)
        assert projective_dimension(self.s1) == 1

    def test_trace(self):
        assert trace_submodule([self.p2], self.p1).dim == 1
        assert trace_submodule([self.p1], self.p1).dim == 2


class TestResolutions:
    """Test cases for syzygies on a Nakayama algebra and on dual numbers."""

    def setup_method(self):
        self.fld = FieldSpec()

    def test_global_dimension_two_chain(self):
        alg = linear_a3_mod_path(self.fld)
        s1, s2, s3 = simple_modules(alg)
        assert projective_dimension(s1) == 2
        assert projective_dimension(s2) == 1
        assert syzygy(s1, 2).dim == 1
        assert syzygy(s1, 3).dim == 0
        assert ext(s1, s3, 2) == 1

    def test_periodic_syzygies_hit_cutoff(self):
        alg = dual_numbers(self.fld)
        (simple,) = simple_modules(alg)
        with pytest.raises(CutoffExceeded):
            projective_dimension(simple, cutoff=3)
        with pytest.raises(CutoffExceeded):
            syzygy(simple, 5, cutoff=3)
        assert ext(simple, simple, 3) == 1


class TestDecomposition:
    """Test cases for decomposition and isomorphism testing."""

    def setup_method(self):
        self.fld = FieldSpec()
        self.alg = upper_triangular_algebra(self.fld)
        self.p1, self.p2 = indecomposable_projectives(self.alg)
        self.s1, self.s2 = simple_modules(self.alg)

    def test_regular_module_splits(self):
        assert summand_count(regular_module(self.alg)) == 2
        assert same_additive_closure(regular_module(self.alg), direct_sum([self.p1, self.p2]))

    def test_multiplicities(self):
        pieces = decompose(direct_sum([self.p1, self.p1, self.p2]))
        assert sorted(k for _, k in pieces) == [1, 2]
        assert sorted(m.dim for m, _ in pieces) == [1, 2]

    def test_isomorphism_verdicts(self):
        assert is_isomorphic(self.s1, self.s2) is IsoVerdict.NOT_ISOMORPHIC
        assert is_isomorphic(self.s2, self.p2) is IsoVerdict.ISOMORPHIC
        iso = find_isomorphism(self.s2, self.p2)
        assert iso is not None and self.fld.rank(iso) == 1
        assert find_isomorphism(self.s1, self.p1) is None

    def test_endomorphism_algebra(self):
        assert endomorphism_algebra(regular_module(self.alg)).dim == 3
        assert endomorphism_algebra(self.p1).dim == 1
