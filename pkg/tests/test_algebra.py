"""Tests for finite-dimensional algebras, ideals and quiver presentations."""

import numpy as np
import pytest

from algebra import (
    Algebra,
    Arrow,
    Quiver,
    algebra_from_json,
    algebra_to_json,
    cartan_matrix,
    clear_idempotent_cache,
    ensure_idempotents,
    ideal_generated,
    ideal_product,
    ideal_sum,
    is_basic,
    loewy_length,
    matrix_algebra,
    opposite,
    path_algebra_mod_relations,
    present_as_quiver,
    presentation_from_json,
    presentation_to_json,
    primitive_idempotents,
    product_algebra,
    quotient_algebra,
    radical,
    radical_powers,
    require_basic,
    upper_triangular_algebra,
    whole_ideal,
)
from core.exceptions import (
    AlgebraError,
    ImproperIdealError,
    NotAssociativeError,
    NotBasic,
    NotFiniteDimensional,
    ParentMismatchError,
    SmallCharacteristic,
)
from linalg import FieldSpec


def linear_a3(fld, with_relation=True):
    """k(1 -> 2 -> 3), optionally modulo the path of length two."""
    quiver = Quiver(3, (Arrow(0, 1, "a"), Arrow(1, 2, "b")))
    relations = [((1, quiver.path([0, 1])),)] if with_relation else []
    return path_algebra_mod_relations(quiver, relations, fld, name="A3lin")


def truncated_loop(fld, power):
    """k[x]/(x^power) as a one-vertex quiver with a loop."""
    quiver = Quiver(1, (Arrow(0, 0, "x"),))
    return path_algebra_mod_relations(quiver, [((1, quiver.path([0] * power)),)], fld, name=f"k[x]/x^{power}")


class TestAlgebraConstruction:
    """Test cases for structure constants and validation."""

    def setup_method(self):
        self.fld = FieldSpec()

    def test_upper_triangular(self):
        alg = upper_triangular_algebra(self.fld)
        assert alg.dim == 3
        assert len(alg.idempotents) == 2
        assert is_basic(alg)

    def test_unit_law_violation(self):
        with pytest.raises(NotAssociativeError):
            Algebra.build(self.fld, [[[1]]], [2])

    def test_zero_algebra_rejected(self):
        with pytest.raises(NotAssociativeError):
            Algebra.build(self.fld, np.zeros((0, 0, 0), dtype=np.int64), [])

    def test_small_characteristic_radical(self):
        alg = upper_triangular_algebra(FieldSpec(2))
        with pytest.raises(SmallCharacteristic):
            alg.radical

    def test_path_algebra_dimensions(self):
        assert linear_a3(self.fld, with_relation=False).dim == 6
        assert linear_a3(self.fld).dim == 5
        assert truncated_loop(self.fld, 3).dim == 3

    def test_infinite_dimensional_quotient(self):
        quiver = Quiver(1, (Arrow(0, 0, "x"),))
        with pytest.raises(NotFiniteDimensional):
            path_algebra_mod_relations(quiver, [], self.fld, degree_cap=4)

    def test_non_composable_path(self):
        quiver = Quiver(3, (Arrow(0, 1, "a"), Arrow(1, 2, "b")))
        with pytest.raises(AlgebraError):
            quiver.path([1, 0])
        with pytest.raises(AlgebraError):
            quiver.path_by_labels(["c"])

    def test_json_round_trip_preserves_key(self):
        alg = linear_a3(FieldSpec(0))
        assert algebra_from_json(algebra_to_json(alg)).key == alg.key


class TestRadicalAndIdempotents:
    """Test cases for the radical, Cartan matrices and basicness."""

    def setup_method(self):
        self.fld = FieldSpec()

    def test_radical_powers(self):
        assert radical_powers(upper_triangular_algebra(self.fld)) == [1, 0, 0, 0]
        assert radical_powers(linear_a3(self.fld, with_relation=False)) == [3, 1, 0, 0]
        assert radical_powers(truncated_loop(self.fld, 3)) == [2, 1, 0, 0]
        assert radical_powers(product_algebra(self.fld, 3)) == [0, 0, 0, 0]

    def test_loewy_length(self):
        assert loewy_length(upper_triangular_algebra(self.fld)) == 2
        assert loewy_length(truncated_loop(self.fld, 3)) == 3

    def test_cartan_matrix(self):
        cartan = cartan_matrix(upper_triangular_algebra(self.fld))
        assert cartan.tolist() == [[1, 0], [1, 1]]
        assert np.array_equal(cartan_matrix(product_algebra(self.fld, 3)), np.eye(3, dtype=np.int64))

    def test_opposite_transposes_cartan(self):
        alg = linear_a3(self.fld)
        assert np.array_equal(cartan_matrix(opposite(alg)), cartan_matrix(alg).T)

    def test_matrix_algebra_is_not_basic(self):
        alg = matrix_algebra(self.fld, 2)
        assert radical(alg).dim == 0
        assert len(primitive_idempotents(alg, np.random.default_rng(1))) == 2
        assert not is_basic(alg)
        with pytest.raises(NotBasic):
            require_basic(alg)

    def test_idempotent_split_does_not_depend_on_call_order(self):
        alg = matrix_algebra(self.fld, 2)
        first = ensure_idempotents(alg)
        assert ensure_idempotents(alg) is first
        clear_idempotent_cache()
        again = ensure_idempotents(alg)
        assert again is not first
        assert all(np.array_equal(a, b) for a, b in zip(first.idempotents, again.idempotents))

    def test_primitive_idempotents_are_orthogonal(self):
        alg = product_algebra(self.fld, 2)
        e, f = primitive_idempotents(alg, np.random.default_rng(0))
        assert alg.is_idempotent(e) and alg.is_idempotent(f)
        assert self.fld.is_zero(alg.mul(e, f))
        assert len(primitive_idempotents(truncated_loop(self.fld, 2))) == 1


class TestIdeals:
    """Test cases for ideals and quotients."""

    def setup_method(self):
        self.fld = FieldSpec()
        self.alg = upper_triangular_algebra(self.fld)
        self.arrow = self.alg.arrow_elements[0][2]

    def test_generated_ideal(self):
        ideal = ideal_generated(self.alg, [self.arrow])
        assert ideal.dim == 1
        assert ideal.is_two_sided()
        assert ideal.is_proper()
        assert ideal == radical(self.alg)

    def test_products_and_sums(self):
        rad = radical(self.alg)
        assert ideal_product(rad, rad).dim == 0
        assert ideal_sum(rad, whole_ideal(self.alg)).dim == 3

    def test_quotient_by_radical_is_semisimple(self):
        top = quotient_algebra(self.alg, radical(self.alg))
        assert top.dim == 2
        assert radical(top).dim == 0
        assert len(top.idempotents) == 2

    def test_quotient_by_whole_algebra(self):
        with pytest.raises(ImproperIdealError):
            quotient_algebra(self.alg, whole_ideal(self.alg))

    def test_parent_mismatch(self):
        other = product_algebra(self.fld, 2)
        with pytest.raises(ParentMismatchError):
            ideal_sum(radical(self.alg), whole_ideal(other))


class TestPresentation:
    """Test cases for quiver-with-relations presentations."""

    def setup_method(self):
        self.fld = FieldSpec()

    def test_hereditary_algebra_has_no_relations(self):
        presentation = present_as_quiver(upper_triangular_algebra(self.fld))
        assert presentation.vertex_count == 2
        assert len(presentation.arrows) == 1
        assert presentation.relations == ()

    def test_zero_relation_is_recovered(self):
        presentation = present_as_quiver(linear_a3(self.fld))
        assert presentation.vertex_count == 3
        assert len(presentation.arrows) == 2
        assert len(presentation.relations) == 1
        assert len(presentation.relations[0]) == 1

    def test_json_form(self):
        presentation = present_as_quiver(truncated_loop(self.fld, 3))
        data = presentation_to_json(presentation)
        assert data["field"] == self.fld.label
        assert data["arrows"] == [[1, 1, "x1"]]
        assert data["relations"] == [[[1, ["x1", "x1", "x1"]]]]
        again = presentation_from_json(data)
        assert again.relations == presentation.relations
