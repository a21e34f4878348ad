import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from matorder.generators import gauss_of_rank
from matorder.ginv import (InverseKind, SearchSpaceTooLarge, enumerate_inverses, full_rank_factorization,
                           is_inverse, is_regular_element, moore_penrose, penrose_residuals, satisfies_penrose)
from matorder.matrix import Matrix, mat_mul
from matorder.oracles import greville_pinv
from matorder.scalar import CF64, GAUSS, INT, RAT, DomainError, mod
from matorder.semigroup import cyclic_group, full_transformation_semigroup, null_semigroup

from strategies import matrices

Z2, Z3 = mod(2), mod(3)


def test_is_inverse_examples():
    I, Z = Matrix.identity(2, RAT), Matrix.zeros(2, 2, RAT)
    X = Matrix.from_rows([[1, 2], [3, 4]], RAT)
    assert is_inverse(I, I, InverseKind.INNER)
    assert is_inverse(Z, X, InverseKind.INNER)
    assert not is_inverse(Z, X, InverseKind.OUTER)
    assert is_inverse(Z, Z, InverseKind.REFLEXIVE)


class TestEnumerate:
    def test_identity(self):
        I = Matrix.identity(2, Z2)
        assert I in enumerate_inverses(I, InverseKind.INNER)
        assert enumerate_inverses(I, InverseKind.INNER) == [I]

    def test_zero_has_every_inner_inverse(self):
        Z = Matrix.zeros(2, 2, Z2)
        found = enumerate_inverses(Z, InverseKind.INNER)
        assert len(found) == 16 and len(set(found)) == 16

    def test_reflexive_inverses_of_e11(self):
        # X E11 X = X and x11 = 1 force X = [[1, b], [c, bc]]
        A = Matrix.from_rows([[1, 0], [0, 0]], Z2)
        expected = [Matrix.from_rows([[1, b], [c, b * c]], Z2) for c in (0, 1) for b in (0, 1)]
        expected.sort(key=lambda M: M.entries)
        assert enumerate_inverses(A, InverseKind.REFLEXIVE) == expected

    def test_matches_literal_sweep(self):
        rng = np.random.default_rng(5)
        for _ in range(6):
            A = Matrix.from_rows(rng.integers(0, 3, (2, 2)).tolist(), Z3)
            for kind in InverseKind:
                brute = [X for t in itertools.product(range(3), repeat=4)
                         if is_inverse(A, X := Matrix.from_flat(2, 2, t, Z3), kind)]
                assert enumerate_inverses(A, kind) == brute

    def test_nonregular_gives_empty_list(self):
        # 2 is not regular in Z4: 2x2 = 4x = 0
        A = Matrix.from_rows([[2]], mod(4))
        assert enumerate_inverses(A, InverseKind.INNER) == []
        assert enumerate_inverses(A, InverseKind.OUTER) == [Matrix.from_rows([[0]], mod(4))]

    def test_limits(self):
        with pytest.raises(SearchSpaceTooLarge):
            enumerate_inverses(Matrix.identity(4, Z3), InverseKind.INNER)
        with pytest.raises(DomainError):
            enumerate_inverses(Matrix.identity(2, RAT), InverseKind.INNER)


class TestMoorePenrose:
    def test_examples_exact(self):
        assert moore_penrose(Matrix.identity(3, RAT)) == Matrix.identity(3, RAT)
        Z = Matrix.zeros(2, 3, RAT)
        assert moore_penrose(Z) == Matrix.zeros(3, 2, RAT)
        D = Matrix.diag([2, 0], RAT)
        X = moore_penrose(D)
        assert X == Matrix.diag([Fraction(1, 2), 0], RAT)
        assert satisfies_penrose(D, X)

    def test_examples_float(self):
        D = Matrix.from_rows([[2, 0], [0, 0]], CF64)
        X = moore_penrose(D)
        assert np.allclose(X.to_numpy(), np.diag([0.5, 0]))
        assert moore_penrose(Matrix.zeros(2, 3, CF64)).shape == (3, 2)

    def test_rectangular_rank_one(self):
        A = Matrix.from_rows([[1, 2, 2]], RAT)  # A+ = A*/|A|^2
        assert moore_penrose(A) == Matrix.from_rows([[Fraction(1, 9)], [Fraction(2, 9)], [Fraction(2, 9)]], RAT)

    def test_rejects_modular(self):
        with pytest.raises(DomainError):
            moore_penrose(Matrix.identity(2, Z3))

    @given(st.integers(0, 2**31), st.integers(0, 3))
    def test_exact_gauss_against_greville(self, seed, r):
        A = gauss_of_rank(3, r, np.random.default_rng(seed))
        X = moore_penrose(A)
        assert satisfies_penrose(A, X)
        assert X == greville_pinv(A)

    @given(matrices(RAT, 2, 3))
    def test_rational_rectangular(self, A):
        X = moore_penrose(A)
        assert satisfies_penrose(A, X) and X == greville_pinv(A)

    def test_float_matches_numpy(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            a = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
            X = moore_penrose(Matrix.from_numpy(a))
            assert np.allclose(X.to_numpy(), np.linalg.pinv(a), atol=1e-10)
            assert max(penrose_residuals(Matrix.from_numpy(a), X)) < 1e-12

    def test_float_rank_cutoff(self):
        a = np.diag([1.0, 1e-13, 0.0]).astype(complex)
        X = moore_penrose(Matrix.from_numpy(a))
        assert np.allclose(X.to_numpy(), np.diag([1.0, 0, 0]))


def test_full_rank_factorization():
    A = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]], RAT)
    F, G = full_rank_factorization(A)
    assert F.shape == (3, 2) and G.shape == (2, 3)
    assert mat_mul(F, G) == A


def test_satisfies_penrose_rejects_wrong():
    A = Matrix.diag([2, 0], RAT)
    assert not satisfies_penrose(A, Matrix.identity(2, RAT))


class TestRegularElement:
    def test_idempotent_and_group(self):
        T3 = full_transformation_semigroup(3)
        assert all(is_regular_element(e, T3) for e in T3.idempotents())
        G = cyclic_group(6)
        assert all(is_regular_element(g, G) for g in range(6))

    def test_null(self):
        S = null_semigroup(2)
        assert is_regular_element(0, S) and not is_regular_element(1, S)
