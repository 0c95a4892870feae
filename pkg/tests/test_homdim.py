"""Tests for homological dimensions, GP modules and Morita fingerprints."""

import numpy as np
import pytest

from algebra import Arrow, Quiver, opposite, path_algebra_mod_relations, product_algebra, upper_triangular_algebra
from core.exceptions import NotGorensteinWithinCutoff
from homdim import (
    ABOVE_CUTOFF,
    AboveCutoff,
    HomFunctor,
    LEFT,
    RIGHT,
    dimension_report,
    fingerprint,
    format_dimension,
    global_dimension,
    gp_equivalence_check,
    gp_membership,
    injective_dimension,
    is_finite,
    morita_consistent,
    resolve,
    transpose_fingerprint,
    virtual_dimension,
)
from linalg import FieldSpec
from modcat import indecomposable_projectives, regular_module, simple_modules
from preproj import FrobeniusCategory, preprojective
from weyl import DynkinType, identity, longest_element


def nakayama_a3(fld):
    """k(1 -> 2 -> 3) modulo the path of length two: global dimension two."""
    quiver = Quiver(3, (Arrow(0, 1, "a"), Arrow(1, 2, "b")))
    return path_algebra_mod_relations(quiver, [((1, quiver.path([0, 1])),)], fld)


def dual_numbers(fld):
    quiver = Quiver(1, (Arrow(0, 0, "x"),))
    return path_algebra_mod_relations(quiver, [((1, quiver.path([0, 0])),)], fld)


def square_zero_two_loops(fld):
    """k<x, y> modulo all paths of length two: local and not Gorenstein."""
    quiver = Quiver(1, (Arrow(0, 0, "x"), Arrow(0, 0, "y")))
    relations = [((1, quiver.path(p)),) for p in ([0, 0], [0, 1], [1, 0], [1, 1])]
    return path_algebra_mod_relations(quiver, relations, fld)


class TestDimensions:
    """Test cases for global, injective and virtual dimension."""

    def setup_method(self):
        self.fld = FieldSpec()

    def test_semisimple(self):
        alg = product_algebra(self.fld, 3)
        assert global_dimension(alg) == 0
        assert virtual_dimension(alg) == 0

    def test_hereditary(self):
        alg = upper_triangular_algebra(self.fld)
        assert global_dimension(alg) == 1
        assert injective_dimension(alg, LEFT) == 1
        assert injective_dimension(alg, RIGHT) == 1
        assert virtual_dimension(alg) == 1

    def test_nakayama_global_dimension_two(self):
        alg = nakayama_a3(self.fld)
        report = dimension_report(alg)
        assert report.global_dimension == 2
        assert report.is_gorenstein
        assert report.virtual_dimension == 2

    def test_self_injective_with_periodic_simple(self):
        alg = dual_numbers(self.fld)
        assert virtual_dimension(alg) == 0
        assert global_dimension(alg, cutoff=4) is ABOVE_CUTOFF
        (simple,) = simple_modules(alg)
        res = resolve(simple, cutoff=4)
        assert not is_finite(res.projective_dimension)
        assert res.period == 1

    def test_not_gorenstein_within_cutoff(self):
        alg = square_zero_two_loops(self.fld)
        with pytest.raises(NotGorensteinWithinCutoff):
            virtual_dimension(alg, cutoff=3)
        report = dimension_report(alg, cutoff=3)
        assert not report.is_gorenstein
        assert report.virtual_dimension is ABOVE_CUTOFF

    def test_above_cutoff_sentinel(self):
        assert AboveCutoff() is ABOVE_CUTOFF
        assert format_dimension(ABOVE_CUTOFF, 12) == ">12"
        assert format_dimension(2, 12) == "2"


class TestGorensteinProjective:
    """Test cases for GP membership and the functor Hom(P, -)."""

    def setup_method(self):
        self.fld = FieldSpec()

    def test_membership_over_hereditary_algebra(self):
        alg = upper_triangular_algebra(self.fld)
        s1, _ = simple_modules(alg)
        p1, _ = indecomposable_projectives(alg)
        assert gp_membership(alg, p1)
        assert not gp_membership(alg, s1)

    def test_everything_is_gp_over_self_injective(self):
        alg = dual_numbers(self.fld)
        (simple,) = simple_modules(alg)
        assert gp_membership(alg, simple, d=0)

    def test_hom_functor_on_generator(self):
        alg = upper_triangular_algebra(self.fld)
        functor = HomFunctor(regular_module(alg))
        assert functor.algebra.dim == 3
        assert functor.apply(regular_module(alg)).dim == 3

    def test_equivalence_check_on_whole_module_category(self):
        a2 = DynkinType("A", 2)
        pi = preprojective(a2, self.fld)
        cat = FrobeniusCategory(pi, identity(a2), longest_element(a2), rng=np.random.default_rng(4))
        report = gp_equivalence_check(cat, 2, seed=4)
        assert report.passed, report.failures
        assert report.virtual_dimension == 0


class TestFingerprints:
    """Test cases for Morita invariants."""

    def setup_method(self):
        self.fld = FieldSpec()

    def test_hereditary_fingerprint(self):
        fp = fingerprint(upper_triangular_algebra(self.fld))
        assert fp.simples == 2
        assert fp.dim == 3
        assert fp.cartan == ((1, 0), (1, 1))
        assert fp.radical_dims == (1, 0, 0, 0)
        assert fp.to_dict()["cartan"] == [[1, 0], [1, 1]]

    def test_transpose_and_opposite(self):
        alg = nakayama_a3(self.fld)
        assert transpose_fingerprint(fingerprint(alg)) == fingerprint(opposite(alg))

    def test_morita_consistency(self):
        alg = upper_triangular_algebra(self.fld)
        assert morita_consistent(alg, opposite(alg))
        assert not morita_consistent(alg, product_algebra(self.fld, 3))
