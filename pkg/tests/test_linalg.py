"""Tests for exact linear algebra."""

from fractions import Fraction

import numpy as np
import pytest

from core.exceptions import ConfigError, DimensionMismatchError, FieldMismatchError, RationalsFactorLimit
from linalg import FieldSpec, Subspace, factor_polynomial, orthogonal_idempotent_polynomials
from linalg.polynomial import to_poly


class TestFieldSpec:
    """Test cases for FieldSpec parsing and scalars."""

    def test_parse(self):
        assert FieldSpec.parse("q").is_rational
        assert FieldSpec.parse("p:7").characteristic == 7
        assert FieldSpec.parse(" P:32003 ").label == "p:32003"

    def test_parse_rejects_composite_and_garbage(self):
        with pytest.raises(ConfigError):
            FieldSpec.parse("p:8")
        with pytest.raises(ConfigError):
            FieldSpec.parse("reals")
        with pytest.raises(ConfigError):
            FieldSpec.parse("p:x")

    def test_large_primes_are_rejected(self):
        with pytest.raises(ConfigError):
            FieldSpec(2147483647)
        with pytest.raises(ConfigError):
            FieldSpec.parse("p:2147483647")

    def test_matmul_with_largest_prime_does_not_overflow(self):
        fld = FieldSpec(67108859)
        top = fld.characteristic - 1
        assert fld.max_inner < 5000
        a = np.full((1, 4), top, dtype=np.int64)
        assert fld.matmul(a, a.T)[0, 0] == 4
        long_row = np.full((2, 5000), top, dtype=np.int64)
        assert np.array_equal(fld.matmul(long_row, long_row.T), np.full((2, 2), 5000))
        assert fld.matmul(long_row, long_row[0]).tolist() == [5000, 5000]

    def test_scalar_of_fraction_mod_p(self):
        fld = FieldSpec(7)
        assert fld.scalar(Fraction(1, 2)) == 4
        assert fld.inv(3) == 5

    def test_check_same(self):
        with pytest.raises(FieldMismatchError):
            FieldSpec(7).check_same(FieldSpec(0))

    def test_json_scalars(self):
        q = FieldSpec(0)
        assert q.scalar_to_json(Fraction(3, 4)) == "3/4"
        assert q.scalar_to_json(Fraction(2)) == 2
        assert q.scalar_from_json("3/4") == Fraction(3, 4)

    def test_digest_depends_on_content(self):
        fld = FieldSpec(7)
        a = fld.asarray([[1, 2], [3, 4]])
        assert fld.digest(a) == fld.digest(a.copy())
        assert fld.digest(a) != fld.digest(fld.asarray([[1, 2], [3, 5]]))


class TestElimination:
    """Test cases for rref, nullspace, solve and inverse on both kinds of field."""

    def setup_method(self):
        self.fields = [FieldSpec(0), FieldSpec(7), FieldSpec()]

    def test_rref_drops_zero_rows(self):
        for fld in self.fields:
            r, pivots = fld.rref(fld.asarray([[1, 2, 3], [2, 4, 6], [0, 0, 1]]))
            assert pivots == [0, 2]
            assert r.shape == (2, 3)

    def test_rref_rejects_vectors(self):
        fld = FieldSpec(7)
        with pytest.raises(DimensionMismatchError):
            fld.rref(fld.asarray([1, 2, 3]))

    def test_nullspace_rows_are_solutions(self):
        for fld in self.fields:
            a = fld.asarray([[1, 1, 0], [0, 1, 1]])
            basis = fld.nullspace(a)
            assert basis.shape == (1, 3)
            assert fld.is_zero(fld.matmul(a, basis.T))

    def test_nullspace_of_empty_matrix_is_everything(self):
        fld = FieldSpec(7)
        assert fld.nullspace(fld.zeros((0, 3))).shape == (3, 3)

    def test_solve(self):
        for fld in self.fields:
            a = fld.asarray([[2, 1], [1, 1]])
            b = fld.asarray([3, 2])
            x = fld.solve(a, b)
            assert np.array_equal(fld.matmul(a, x), b)

    def test_solve_inconsistent(self):
        fld = FieldSpec(0)
        assert fld.solve(fld.asarray([[1, 1], [1, 1]]), fld.asarray([1, 2])) is None

    def test_inverse(self):
        for fld in self.fields:
            a = fld.asarray([[1, 2], [3, 5]])
            inv = fld.inverse(a)
            assert np.array_equal(fld.matmul(a, inv), fld.eye(2))
        assert FieldSpec(0).inverse(FieldSpec(0).asarray([[1, 2], [2, 4]])) is None

    def test_rank_mod_p_differs_from_rationals(self):
        matrix = [[1, 1], [1, 8]]
        assert FieldSpec(0).rank(FieldSpec(0).asarray(matrix)) == 2
        assert FieldSpec(7).rank(FieldSpec(7).asarray(matrix)) == 1


class TestSubspace:
    """Test cases for canonical subspaces."""

    def setup_method(self):
        self.fld = FieldSpec(0)

    def test_equal_spans_are_equal(self):
        u = Subspace.span(self.fld, 3, [[1, 0, 1], [0, 1, 1]])
        v = Subspace.span(self.fld, 3, [[1, 1, 2], [1, -1, 0]])
        assert u == v
        assert hash(u) == hash(v)

    def test_sum_and_intersection(self):
        u = Subspace.span(self.fld, 3, [[1, 0, 0], [0, 1, 0]])
        v = Subspace.span(self.fld, 3, [[0, 1, 0], [0, 0, 1]])
        assert u.sum(v) == Subspace.whole(self.fld, 3)
        assert u.intersect(v) == Subspace.span(self.fld, 3, [[0, 1, 0]])
        assert u.intersect(Subspace.zero(self.fld, 3)).dim == 0

    def test_ambient_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            Subspace.whole(self.fld, 2).sum(Subspace.whole(self.fld, 3))

    def test_membership_and_coordinates(self):
        u = Subspace.span(self.fld, 3, [[1, 0, 2], [0, 1, 3]])
        vec = self.fld.asarray([2, 5, 19])
        assert u.contains(vec)
        assert not u.contains(self.fld.asarray([0, 0, 1]))
        coords = u.coordinates(vec)
        assert np.array_equal(self.fld.matmul(coords, u.basis), vec)

    def test_quotient_projection_kills_subspace(self):
        u = Subspace.span(self.fld, 3, [[1, 1, 0]])
        proj = u.quotient_projection()
        assert proj.shape == (2, 3)
        assert self.fld.is_zero(self.fld.matmul(proj, u.basis.T))
        assert np.array_equal(self.fld.matmul(proj, u.complement_embedding()), self.fld.eye(2))


class TestPolynomials:
    """Test cases for factorization and idempotent splitting."""

    def test_factor_over_prime(self):
        fld = FieldSpec(7)
        factors = factor_polynomial(fld, [1, 0, -1])
        assert sorted(tuple(f) for f, _ in factors) == [(1, 1), (1, 6)]
        assert all(m == 1 for _, m in factors)

    def test_factor_with_multiplicity(self):
        factors = factor_polynomial(FieldSpec(7), [1, 2, 1])
        assert factors == [([1, 1], 2)]

    def test_rational_degree_limit(self):
        with pytest.raises(RationalsFactorLimit):
            factor_polynomial(FieldSpec(0), [1, 0, 0, -2])

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            factor_polynomial(FieldSpec(7), [0])

    def test_idempotent_polynomials_split_unity(self):
        fld = FieldSpec(7)
        factors = factor_polynomial(fld, [1, 0, -1])
        total = to_poly(fld, [1, 0, -1])
        e1, e2 = [to_poly(fld, e) for e in orthogonal_idempotent_polynomials(fld, factors)]
        assert (e1 * e2).rem(total).is_zero
        assert (e1 + e2).rem(total).is_one
        assert (e1 * e1 - e1).rem(total).is_zero
