import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from matorder.matrix import (DEFAULT_CTX, Matrix, ProductKind, ShapeError, ToleranceContext, conj_transpose, det,
                             hadamard, inverse, kronecker, mat_eq, mat_mul, product, rank, rref)
from matorder.scalar import CF64, GAUSS, INT, RAT, DomainError, GaussianRational, mod

from strategies import matrices, mod_square, square

Z2 = mod(2)


def M(rows, dom=INT):
    return Matrix.from_rows(rows, dom)


class TestConventional:
    def test_identity_and_zero(self):
        A = M([[1, 2], [3, 4]])
        assert mat_mul(Matrix.identity(2, INT), A) == A
        assert mat_mul(Matrix.zeros(2, 2, INT), A) == Matrix.zeros(2, 2, INT)

    def test_mod2_hand_expansion(self):
        assert mat_mul(M([[1, 1], [0, 1]], Z2), M([[1, 0], [1, 1]], Z2)) == M([[0, 1], [1, 1]], Z2)

    def test_shape_and_domain_mismatch(self):
        with pytest.raises(ShapeError):
            mat_mul(Matrix.zeros(2, 3, INT), Matrix.zeros(2, 3, INT))
        with pytest.raises(DomainError):
            mat_mul(Matrix.zeros(2, 2, INT), Matrix.zeros(2, 2, RAT))


class TestHadamard:
    def test_examples(self):
        A = M([[1, 2], [3, 4]])
        assert hadamard(A, Matrix.ones(2, 2, INT)) == A
        assert hadamard(A, Matrix.zeros(2, 2, INT)).is_zero()
        assert hadamard(A, M([[5, 6], [7, 8]])) == M([[5, 12], [21, 32]])

    def test_requires_equal_shapes(self):
        with pytest.raises(ShapeError):
            hadamard(Matrix.zeros(2, 2, INT), Matrix.zeros(2, 3, INT))


class TestKronecker:
    def test_scalar_left_factor(self):
        B = M([[1, 2], [3, 4]])
        assert kronecker(M([[3]]), B) == M([[3, 6], [9, 12]])
        assert kronecker(B, Matrix.identity(1, INT)) == B

    def test_block_diagonal(self):
        X = M([[0, 1], [1, 0]])
        K = kronecker(Matrix.identity(2, INT), X)
        expected = np.kron(np.eye(2, dtype=int), X.to_int_array())
        assert (K.to_int_array() == expected).all()

    def test_against_numpy(self):
        rng = np.random.default_rng(1)
        a, b = rng.integers(-3, 4, (2, 3)), rng.integers(-3, 4, (3, 2))
        K = kronecker(Matrix.from_rows(a.tolist(), INT), Matrix.from_rows(b.tolist(), INT))
        assert K.shape == (6, 6)
        assert (K.to_int_array() == np.kron(a, b)).all()


def test_conj_transpose_examples():
    A = M([[1, 2, 3], [4, 5, 6]], RAT)
    assert conj_transpose(A) == M([[1, 4], [2, 5], [3, 6]], RAT)
    i = GaussianRational(0, 1)
    assert conj_transpose(Matrix.from_rows([[i]], GAUSS)) == Matrix.from_rows([[-i]], GAUSS)


def test_mat_eq_examples():
    A = M([[1, 2], [3, 4]], RAT)
    assert mat_eq(A, A)
    assert not mat_eq(A, M([[1, 2], [3, 5]], RAT))
    F = Matrix.from_numpy(np.array([[1.0, 2.0], [3.0, 4.0]]))
    G = Matrix.from_numpy(np.array([[1.0 + DEFAULT_CTX.eps_eq / 2, 2.0], [3.0, 4.0]]))
    assert mat_eq(F, G)
    assert not mat_eq(F, Matrix.from_numpy(F.to_numpy() + 1e-6))


def test_rank_examples():
    assert rank(Matrix.identity(4, RAT)) == 4
    assert rank(Matrix.zeros(3, 3, RAT)) == 0
    assert rank(M([[1, 2], [2, 4]], RAT)) == 1
    assert rank(M([[1, 2], [2, 4]], INT)) == 1
    assert rank(Matrix.from_numpy(np.array([[1.0, 2.0], [2.0, 4.0 + 1e-14]]))) == 1


def test_rank_rejects_composite_modulus():
    with pytest.raises(DomainError):
        rank(Matrix.identity(2, mod(4)))


def test_inverse_and_det():
    A = M([[2, 1], [1, 1]], RAT)
    assert mat_mul(A, inverse(A)) == Matrix.identity(2, RAT)
    assert det(A) == 1
    assert det(M([[1, 2], [2, 4]], RAT)) == 0


def test_tolerance_context_validation():
    with pytest.raises(ValueError):
        ToleranceContext(eps_eq=-1)
    assert DEFAULT_CTX.eps_eq == 1e-9 and DEFAULT_CTX.eps_psd == 1e-9 and DEFAULT_CTX.eps_rank == 1e-10


def test_matrix_invariants():
    with pytest.raises(ValueError):
        Matrix.from_flat(2, 2, [1, 2, 3], INT)
    with pytest.raises(ValueError):
        Matrix.zeros(0, 2, INT)
    assert Matrix.from_rows([[3, -1]], mod(3)).entries == (0, 2)


def _brute_rank(A):
    best = 0
    for k in range(1, min(A.shape) + 1):
        for rs in itertools.combinations(range(A.rows), k):
            for cs in itertools.combinations(range(A.cols), k):
                if det(A.submatrix(rs, cs)) != 0:
                    best = k
    return best


@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 3).flatmap(lambda c: matrices(RAT, r, c))))
def test_rank_matches_largest_nonzero_minor(A):
    assert rank(A) == _brute_rank(A)


@given(square(GAUSS, 2), square(GAUSS, 2), square(GAUSS, 2))
def test_exact_associativity_and_star_reversal(A, B, C):
    assert mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))
    assert hadamard(hadamard(A, B), C) == hadamard(A, hadamard(B, C))
    assert hadamard(A, B) == hadamard(B, A)
    assert conj_transpose(mat_mul(A, B)) == mat_mul(conj_transpose(B), conj_transpose(A))
    assert conj_transpose(conj_transpose(A)) == A


@given(matrices(INT, 1, 2), matrices(INT, 2, 1), matrices(INT, 2, 2))
def test_kronecker_associative_across_sizes(A, B, C):
    left = kronecker(kronecker(A, B), C)
    assert left == kronecker(A, kronecker(B, C))
    assert left.shape == (A.rows * B.rows * C.rows, A.cols * B.cols * C.cols)


@given(mod_square(5, 2), mod_square(5, 2))
def test_product_dispatch(A, B):
    assert product(A, B, ProductKind.CONVENTIONAL) == mat_mul(A, B)
    assert product(A, B, ProductKind.HADAMARD) == hadamard(A, B)


def test_float_associativity_within_tolerance():
    rng = np.random.default_rng(3)
    for _ in range(20):
        A, B, C = (Matrix.from_numpy(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
                   for _ in range(3))
        assert mat_eq(mat_mul(mat_mul(A, B), C), mat_mul(A, mat_mul(B, C)), ToleranceContext(eps_eq=1e-9 * 50))


def test_rref_pivots():
    R, piv = rref(M([[0, 2, 4], [0, 1, 2], [1, 0, 1]], RAT))
    assert piv == [0, 1]
    assert R.row(0) == (1, 0, 1) and R.row(1) == (0, 1, 2)


def test_text_roundtrip():
    A = Matrix.from_rows([[Fraction(1, 2), GaussianRational(0, -1)], [3, GaussianRational(1, 2)]], GAUSS)
    from matorder.textio import parse_matrix
    assert parse_matrix(A.to_text()) == A
