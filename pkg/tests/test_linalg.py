"""Exact rank / kernel / relation computations."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ciforge import (
    ExactMatrix,
    NotHomogeneousError,
    PolynomialRing,
    PrimeField,
    QQ,
    RingMismatchError,
    kernel_basis,
    linear_relation_polys,
    parse_polynomial,
    rank,
)


def qmat(rows, cols=None):
    return ExactMatrix.from_rows(QQ, rows, cols=cols)


class TestRank:
    def test_identity(self):
        assert rank(qmat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 3

    def test_dependent_rows(self):
        m = qmat([[1, -2, 1, 0], [0, 1, -2, 1], [1, -1, -1, 1]])
        assert rank(m) == 2

    def test_zero_matrix(self):
        assert rank(qmat([[0, 0], [0, 0]])) == 0

    def test_no_rows(self):
        assert rank(ExactMatrix(QQ, (), 4)) == 0

    def test_prime_field(self):
        field = PrimeField(5)
        m = ExactMatrix.from_rows(field, [[1, 2], [3, 6]])
        assert rank(m) == 1  # second row is 3x the first mod 5


class TestKernel:
    def test_single_relation(self):
        assert kernel_basis(qmat([[1, 1]])) == [(Fraction(-1), Fraction(1))]

    def test_invertible_has_trivial_kernel(self):
        assert kernel_basis(qmat([[2, 1], [1, 1]])) == []

    def test_twisted_cubic_differentials(self):
        columns = [[1, -2, 1, 0], [0, 1, -2, 1], [1, -1, -1, 1]]
        m = ExactMatrix.from_columns(QQ, columns)
        assert kernel_basis(m) == [(Fraction(-1), Fraction(-1), Fraction(1))]

    def test_empty_row_matrix_kernel_is_standard_basis(self):
        basis = kernel_basis(ExactMatrix(QQ, (), 3))
        assert len(basis) == 3
        assert basis[0] == (Fraction(1), Fraction(0), Fraction(0))

    @given(
        st.integers(1, 4),
        st.integers(1, 4),
        st.data(),
    )
    def test_kernel_properties(self, nrows, ncols, data):
        rows = [
            [
                Fraction(data.draw(st.integers(-6, 6)), data.draw(st.integers(1, 4)))
                for _ in range(ncols)
            ]
            for _ in range(nrows)
        ]
        m = qmat(rows)
        basis = kernel_basis(m)
        assert rank(m) + len(basis) == ncols
        for v in basis:
            assert m.multiply_vector(v) == (Fraction(0),) * nrows
            last_nonzero = max(i for i, c in enumerate(v) if c)
            assert v[last_nonzero] == 1


class TestRelations:
    @pytest.fixture
    def ring(self):
        return PolynomialRing(QQ, ("T0", "T1", "T2", "T3"))

    def test_proportional_pair(self, ring):
        f = parse_polynomial("T0*T3 - T1*T2", ring)
        assert linear_relation_polys([f, f * 2]) == (Fraction(-2), Fraction(1))

    def test_independent_quadrics(self, ring, twisted_cubic):
        assert linear_relation_polys(list(twisted_cubic)) is None

    def test_sum_relation(self, ring):
        polys = [
            parse_polynomial("T0^2", ring),
            parse_polynomial("T1^2", ring),
            parse_polynomial("T0^2 + T1^2", ring),
        ]
        relation = linear_relation_polys(polys)
        assert relation == (Fraction(-1), Fraction(-1), Fraction(1))
        total = polys[0].ring.zero()
        for c, p in zip(relation, polys):
            total = total + p * c
        assert total.is_zero()

    def test_mixed_degrees_rejected(self, ring):
        with pytest.raises(NotHomogeneousError):
            linear_relation_polys(
                [parse_polynomial("T0", ring), parse_polynomial("T1^2", ring)]
            )

    def test_mixed_rings_rejected(self, ring):
        other = PolynomialRing(QQ, ("x", "y"))
        with pytest.raises(RingMismatchError):
            linear_relation_polys([ring.variable(0), other.variable(0)])

    def test_empty_list(self):
        assert linear_relation_polys([]) is None


class TestMatrixValidation:
    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            ExactMatrix(QQ, ((QQ.scalar(1),), (QQ.scalar(1), QQ.scalar(2))), 1)

    def test_vector_length_checked(self):
        m = qmat([[1, 2]])
        with pytest.raises(ValueError):
            m.multiply_vector((QQ.scalar(1),))
