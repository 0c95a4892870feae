"""Tests for preprojective algebras, torsion ideals and the categories C_{v,w}."""

from unittest.mock import patch

import numpy as np
import pytest

from algebra import cartan_matrix, whole_ideal
from config import RunConfig
from core.exceptions import ConfigError, MembershipError, TorsionError
from core.pipeline import CategoryPipeline
from linalg import FieldSpec
from modcat import IsoVerdict, identity_map, is_isomorphic, regular_module, summand_count
from preproj import (
    FrobeniusCategory,
    class_containment,
    clear_torsion_cache,
    commutativity_counterexample,
    convention_names,
    duality_Phi,
    ideal_action_subspace,
    ideal_index,
    in_category,
    is_anti_automorphism,
    pi_w,
    preprojective,
    preprojective_auslander_algebra,
    psi_map,
    random_module,
    simple_torsion_ideal,
    torsion_apply,
    torsion_ideal,
    torsion_pair_violations,
)
from preproj import torsion as torsion_module
from weyl import DynkinType, element_from_word, identity, longest_element


class TestPreprojective:
    """Test cases for Π(Q) and the anti-automorphism ψ."""

    def setup_method(self):
        self.fld = FieldSpec()
        self.pi = preprojective(DynkinType("A", 2), self.fld)

    def test_dimensions(self):
        assert preprojective(DynkinType("A", 1), self.fld).dim == 1
        assert self.pi.dim == 4
        assert len(self.pi.quiver.arrows) == 2

    def test_relations_vanish(self):
        assert all(self.fld.is_zero(r) for r in self.pi.relation_elements())

    def test_psi_is_anti_automorphism(self):
        assert is_anti_automorphism(self.pi.algebra, psi_map(self.pi))

    def test_duality_preserves_regular_module(self):
        reg = regular_module(self.pi.algebra)
        phi = duality_Phi(self.pi, reg)
        phi.check()
        assert is_isomorphic(phi, reg) is IsoVerdict.ISOMORPHIC

    def test_rationals_agree_with_prime(self):
        assert preprojective(DynkinType("A", 2), FieldSpec(0)).dim == self.pi.dim

    @pytest.mark.slow
    def test_a3_dimension(self):
        assert preprojective(DynkinType("A", 3), self.fld).dim == 10


class TestTorsionIdeals:
    """Test cases for I_w and its torsion pair."""

    def setup_method(self):
        self.fld = FieldSpec()
        self.a2 = DynkinType("A", 2)
        self.pi = preprojective(self.a2, self.fld)

    def test_simple_ideals_have_codimension_one(self):
        for vertex in (1, 2):
            assert self.pi.dim - simple_torsion_ideal(self.pi, vertex).dim == 1

    def test_extreme_elements(self):
        assert torsion_ideal(self.pi, identity(self.a2)).ideal.dim == self.pi.dim
        assert torsion_ideal(self.pi, longest_element(self.a2)).ideal.dim == 0

    def test_length_two_elements(self):
        for word in ([1, 2], [2, 1]):
            data = torsion_ideal(self.pi, element_from_word(self.a2, word))
            assert self.pi.dim - data.ideal.dim == 3
            assert not data.is_idempotent()

    def test_torsion_pair_axioms_on_random_modules(self):
        rng = np.random.default_rng(7)
        modules = [random_module(self.pi, rng) for _ in range(3)]
        for u in (element_from_word(self.a2, [1]), element_from_word(self.a2, [1, 2])):
            assert torsion_pair_violations(self.pi, u, modules) == []

    def test_cached_entry_is_verified_on_request(self):
        clear_torsion_cache()
        w0 = longest_element(self.a2)
        assert not torsion_ideal(self.pi, w0, verify=False).verified
        with patch("preproj.torsion.ideal_along_word", return_value=whole_ideal(self.pi.algebra)):
            with pytest.raises(TorsionError):
                torsion_ideal(self.pi, w0)
        assert torsion_ideal(self.pi, w0).verified

    def test_ideal_action_lies_in_torsion_part(self):
        rng = np.random.default_rng(11)
        modules = [random_module(self.pi, rng) for _ in range(4)]
        for word in ([1], [1, 2], [2, 1]):
            w = element_from_word(self.a2, word)
            data = torsion_ideal(self.pi, w)
            for module in modules:
                split = torsion_apply(self.pi, w, module)
                assert split.subspace.contains_subspace(ideal_action_subspace(data, module))

    def test_trace_is_larger_than_ideal_action(self):
        data = torsion_ideal(self.pi, element_from_word(self.a2, [1, 2]))
        assert ideal_action_subspace(data, data.module).dim == 0
        assert torsion_apply(self.pi, data.w, data.module).subspace.dim == 1

    def test_pipeline_starts_with_empty_cache(self):
        torsion_ideal(self.pi, element_from_word(self.a2, [1]))
        assert torsion_module._TORSION
        CategoryPipeline(RunConfig(type="A1"))
        assert not torsion_module._TORSION

    def test_conventions(self):
        assert "w0-inverse" in convention_names()
        w0 = longest_element(self.a2)
        assert ideal_index(identity(self.a2)) == w0
        assert ideal_index(w0) == identity(self.a2)
        with pytest.raises(ConfigError):
            ideal_index(w0, "sideways")

    def test_membership_at_the_extremes(self):
        reg = regular_module(self.pi.algebra)
        e, w0 = identity(self.a2), longest_element(self.a2)
        assert in_category(self.pi, e, w0, reg)
        assert not in_category(self.pi, e, e, reg)

    def test_class_containment(self):
        e, w0 = identity(self.a2), longest_element(self.a2)
        s1 = element_from_word(self.a2, [1])
        assert class_containment(self.pi, e, s1)
        assert class_containment(self.pi, s1, w0)
        assert not class_containment(self.pi, w0, s1)


class TestFrobeniusCategory:
    """Test cases for C_{v,w} over Π(A2)."""

    def setup_method(self):
        self.fld = FieldSpec()
        self.a2 = DynkinType("A", 2)
        self.pi = preprojective(self.a2, self.fld)
        self.e = identity(self.a2)
        self.w0 = longest_element(self.a2)

    def test_whole_module_category(self):
        cat = FrobeniusCategory(self.pi, self.e, self.w0, rng=np.random.default_rng(0))
        assert cat.generator.dim == 4
        assert cat.generators_agree()
        assert cat.is_frobenius()
        assert summand_count(cat.generator) == 2
        assert cat.pi_vw().dim == 4

    def test_phi2_is_identity_without_torsion_free_part(self):
        cat = FrobeniusCategory(self.pi, self.e, self.w0)
        phi2 = cat.phi2()
        assert phi2.injective and phi2.surjective
        assert phi2.is_homomorphism
        assert phi2.kernel_matches_factoring

    def test_zero_category(self):
        cat = FrobeniusCategory(self.pi, self.e, self.e)
        assert cat.generator.dim == 0
        assert cat.injectives.dim == 0
        reg = regular_module(self.pi.algebra)
        with pytest.raises(MembershipError):
            cat.kernel_cokernel(identity_map(reg))

    def test_every_pair_shares_add_and_is_frobenius(self):
        elements = [element_from_word(self.a2, w) for w in ([], [1], [2], [1, 2], [2, 1], [1, 2, 1])]
        for v in elements:
            for w in elements:
                cat = FrobeniusCategory(self.pi, v, w, rng=np.random.default_rng(1))
                assert cat.generators_agree(), repr(cat)
                if cat.generator.dim:
                    assert cat.is_frobenius(), repr(cat)

    def test_induced_maps_on_zero_category(self):
        cat = FrobeniusCategory(self.pi, self.e, self.e)
        phi2, tau1 = cat.induced_maps()
        assert (phi2.source_dim, phi2.target_dim, phi2.rank) == (0, 0, 0)
        assert phi2.injective and phi2.surjective
        assert (tau1.source_dim, tau1.target_dim, tau1.rank) == (4, 0, 0)
        assert tau1.surjective and not tau1.injective
        assert tau1.kernel_matches_factoring

    def test_induced_maps_with_zero_target_over_a1(self):
        a1 = DynkinType("A", 1)
        s1 = element_from_word(a1, [1])
        cat = FrobeniusCategory(preprojective(a1, self.fld), s1, s1)
        phi2, tau1 = cat.induced_maps()
        assert cat.generator.dim == 0
        assert (phi2.source_dim, phi2.rank) == (1, 0)
        assert phi2.surjective and not phi2.injective
        assert (tau1.source_dim, tau1.rank) == (0, 0)

    def test_commuted_generator_has_other_multiplicities(self):
        s1 = element_from_word(self.a2, [1])
        s2 = element_from_word(self.a2, [2])
        cat = FrobeniusCategory(self.pi, s1, s2, rng=np.random.default_rng(3))
        assert cat.generator.dim == 1
        assert cat.commuted_generator.dim == 2
        assert cat.generators_agree()
        assert not cat.generators_isomorphic()
        assert cat.transport is None
        tau1 = cat.tau1()
        assert (tau1.source_dim, tau1.target_dim, tau1.rank) == (3, 4, 3)
        assert tau1.is_homomorphism

    def test_samples_lie_in_the_category(self):
        s1 = element_from_word(self.a2, [1])
        cat = FrobeniusCategory(self.pi, self.e, s1, rng=np.random.default_rng(2))
        for module in cat.sample_modules(3):
            assert cat.contains(module)

    def test_pi_w_of_longest_element(self):
        assert pi_w(self.pi, self.w0).dim == 4

    def test_unknown_convention(self):
        with pytest.raises(ConfigError):
            FrobeniusCategory(self.pi, self.e, self.w0, convention="sideways")

    def test_auslander_algebra(self):
        algebra = preprojective_auslander_algebra(self.pi)
        assert cartan_matrix(algebra).shape == (4, 4)
        assert algebra.dim == 10


class TestCommutativityCounterexample:
    """Test cases for torsion radicals that fail to commute over k(1 -> 2)."""

    def setup_method(self):
        self.report = commutativity_counterexample(FieldSpec(), np.random.default_rng(0))

    def test_catalogue(self):
        assert self.report.indecomposables == ["S1", "S2", "P1"]

    def test_torsion_classes(self):
        assert set(self.report.torsion_classes) == {
            (),
            ("S1",),
            ("S2",),
            ("S1", "P1"),
            ("S1", "S2", "P1"),
        }

    def test_failure_found(self):
        assert self.report.found
        assert any(
            f.free_class == ("S1", "P1") and f.torsion_class == ("S2",) and f.module == "P1"
            for f in self.report.failures
        )
