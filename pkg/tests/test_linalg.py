"""Exact matrix arithmetic: ranks, kernels, inverses over Q and F_p."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quiverhom.linalg import (ExactMatrix, FieldSpec, inverse, is_max_rank,
                              kernel_basis, random_matrix, rank)

QQ = FieldSpec.rationals()
FP = FieldSpec.prime()


class TestFieldSpec:
    def test_parse(self):
        assert FieldSpec.parse("q") == QQ
        assert FieldSpec.parse("fp:7").char == 7
        assert FieldSpec.parse("fp:2147483647") == FP

    def test_parse_rejects_garbage(self):
        for text in ("f7", "fp:8", "fp:-3", "fp:", "rational"):
            with pytest.raises(ValueError):
                FieldSpec.parse(text)

    def test_str_roundtrip(self):
        for f in (QQ, FP, FieldSpec.prime(97)):
            assert FieldSpec.parse(str(f)) == f

    def test_composite_char_rejected(self):
        with pytest.raises(ValueError):
            FieldSpec.prime(91)

    def test_oversized_prime_rejected(self):
        with pytest.raises(ValueError):
            FieldSpec.prime(2**31 + 11)


class TestExactMatrix:
    def test_from_rows_and_back(self):
        m = ExactMatrix.from_rows(QQ, [[1, Fraction(1, 2)], [0, 3]])
        assert m.to_rows() == [[1, Fraction(1, 2)], [0, 3]]
        assert (m.rows, m.cols) == (2, 2)

    def test_empty_shapes_need_explicit_shape(self):
        m = ExactMatrix.from_rows(FP, [], shape=(0, 3))
        assert (m.rows, m.cols) == (0, 3)
        assert rank(m) == 0

    def test_modular_reduction_on_input(self):
        m = ExactMatrix.from_rows(FieldSpec.prime(7), [[9, -1]])
        assert m.to_rows() == [[2, 6]]

    def test_arithmetic(self):
        a = ExactMatrix.from_rows(QQ, [[1, 2], [3, 4]])
        b = ExactMatrix.identity(QQ, 2)
        assert (a + b).to_rows() == [[2, 2], [3, 5]]
        assert (a - a).to_rows() == [[0, 0], [0, 0]]
        assert (a @ b).to_rows() == a.to_rows()
        assert (-a).to_rows() == [[-1, -2], [-3, -4]]

    def test_matmul_matches_integers_mod_p(self):
        rng = np.random.default_rng(3)
        a_rows = rng.integers(0, 1000, size=(4, 6)).tolist()
        b_rows = rng.integers(0, 1000, size=(6, 5)).tolist()
        p = FP.char
        want = (np.array(a_rows, dtype=object) @ np.array(b_rows, dtype=object)) % p
        got = ExactMatrix.from_rows(FP, a_rows) @ ExactMatrix.from_rows(FP, b_rows)
        assert got.to_rows() == want.tolist()

    def test_transpose_and_kron(self):
        a = ExactMatrix.from_rows(QQ, [[1, 2]])
        b = ExactMatrix.from_rows(QQ, [[0], [3]])
        assert a.transpose().to_rows() == [[1], [2]]
        k = a.kron(b)
        assert (k.rows, k.cols) == (2, 2)
        assert k.to_rows() == [[0, 0], [3, 6]]

    def test_equality_and_hash(self):
        a = ExactMatrix.from_rows(FP, [[1, 2]])
        b = ExactMatrix.from_rows(FP, [[1, 2]])
        assert a == b and hash(a) == hash(b)
        assert a != ExactMatrix.from_rows(FP, [[2, 1]])


class TestRank:
    def test_hand_rank(self):
        rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        assert rank(ExactMatrix.from_rows(QQ, rows)) == 2
        assert rank(ExactMatrix.from_rows(FP, rows)) == 2

    def test_rank_characteristic_matters(self):
        # singular mod 2 only
        rows = [[1, 1], [1, -1]]
        assert rank(ExactMatrix.from_rows(QQ, rows)) == 2
        assert rank(ExactMatrix.from_rows(FieldSpec.prime(2), rows)) == 1

    def test_max_rank(self):
        assert is_max_rank(ExactMatrix.identity(FP, 3))
        assert is_max_rank(ExactMatrix.from_rows(QQ, [[1, 0, 0], [0, 1, 0]]))
        assert not is_max_rank(ExactMatrix.from_rows(QQ, [[1, 1], [1, 1]]))
        assert is_max_rank(ExactMatrix.zeros(FP, 0, 5))

    def test_random_rectangular_full_rank(self):
        rng = np.random.default_rng(0)
        m = random_matrix(3, 5, FP, rng)
        assert rank(m) == 3

    def test_fraction_entries(self):
        rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), 1]]
        assert rank(ExactMatrix.from_rows(QQ, rows)) == 2
        dependent = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
        assert rank(ExactMatrix.from_rows(QQ, dependent)) == 1


class TestKernel:
    def test_kernel_dimension_and_membership(self):
        m = ExactMatrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6]])
        basis = kernel_basis(m)
        assert len(basis) == 2
        for v in basis:
            assert (m @ v).to_rows() == [[0]] * m.rows

    def test_kernel_of_injective_is_empty(self):
        m = ExactMatrix.from_rows(FP, [[1, 0], [0, 1], [5, 7]])
        assert kernel_basis(m) == []

    def test_zero_row_matrix_kernel_is_everything(self):
        m = ExactMatrix.zeros(QQ, 0, 3)
        basis = kernel_basis(m)
        assert len(basis) == 3

    def test_kernel_vectors_linearly_independent(self):
        m = ExactMatrix.from_rows(FP, [[1, 1, 1, 1]])
        basis = kernel_basis(m)
        stacked = ExactMatrix.from_rows(
            FP, [[v.to_rows()[i][0] for v in basis] for i in range(4)], shape=(4, len(basis)))
        assert rank(stacked) == len(basis) == 3


class TestInverse:
    def test_inverse_rational(self):
        m = ExactMatrix.from_rows(QQ, [[2, 1], [1, 1]])
        inv = inverse(m)
        assert (m @ inv).to_rows() == ExactMatrix.identity(QQ, 2).to_rows()

    def test_inverse_prime_field(self):
        m = ExactMatrix.from_rows(FP, [[2, 1], [1, 1]])
        assert (inverse(m) @ m) == ExactMatrix.identity(FP, 2)

    def test_singular_raises(self):
        with pytest.raises(ValueError):
            inverse(ExactMatrix.from_rows(QQ, [[1, 2], [2, 4]]))


class TestRandomMatrix:
    def test_deterministic_given_seed(self):
        a = random_matrix(3, 3, FP, np.random.default_rng(11))
        b = random_matrix(3, 3, FP, np.random.default_rng(11))
        assert a == b

    def test_rational_entries_bounded(self):
        m = random_matrix(4, 4, QQ, np.random.default_rng(1), bound=5)
        assert all(-5 <= x <= 5 for row in m.to_rows() for x in row)


int_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(deadline=None)
@given(int_matrices)
def test_rank_agrees_across_fields(rows):
    # integer matrices: rank over Q equals rank mod a huge prime generically;
    # 2^31-1 never divides any minor of 5x5 matrices with entries <= 30
    assert rank(ExactMatrix.from_rows(QQ, rows)) == rank(ExactMatrix.from_rows(FP, rows))


@settings(deadline=None)
@given(int_matrices)
def test_kernel_count_complements_rank(rows):
    for f in (QQ, FP):
        m = ExactMatrix.from_rows(f, rows)
        assert len(kernel_basis(m)) == m.cols - rank(m)


@settings(deadline=None)
@given(int_matrices, st.integers(0, 2**32 - 1))
def test_rank_invariant_under_row_shuffle(rows, seed):
    rng = np.random.default_rng(seed)
    shuffled = [rows[i] for i in rng.permutation(len(rows))]
    assert rank(ExactMatrix.from_rows(QQ, rows)) == rank(ExactMatrix.from_rows(QQ, shuffled))
