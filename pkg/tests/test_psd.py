from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from matorder import generators as gen
from matorder.matrix import Matrix, conj_transpose, hadamard, mat_mul, sub
from matorder.psd import (NotPsdError, is_hermitian, is_psd, loewner_gap, loewner_leq, principal_minors,
                          psd_approx_term, psd_necessary_minors, psd_sqrt, quadratic_form)
from matorder.scalar import CF64, GAUSS, RAT, DomainError, GaussianRational, mod

from strategies import matrices, square

i_ = GaussianRational(0, 1)


def test_hermitian_examples():
    assert is_hermitian(Matrix.from_rows([[1, 2], [2, 5]], RAT))
    assert not is_hermitian(Matrix.from_rows([[0, i_], [i_, 0]], GAUSS))
    assert is_hermitian(Matrix.from_rows([[1, 1 + i_], [1 - i_, 2]], GAUSS))
    assert not is_hermitian(Matrix.from_rows([[0, 1j], [1j, 0]], CF64))


class TestIsPsd:
    @pytest.mark.parametrize("dom", [RAT, GAUSS, CF64])
    def test_examples(self, dom):
        assert is_psd(Matrix.identity(3, dom)).verdict
        assert is_psd(Matrix.from_rows([[2, 1], [1, 2]], dom)).verdict
        cert = is_psd(Matrix.from_rows([[1, 2], [2, 1]], dom))
        assert not cert.verdict
        assert cert.validate(Matrix.from_rows([[1, 2], [2, 1]], dom))

    def test_named_witness(self):
        A = Matrix.from_rows([[1, 2], [2, 1]], RAT)
        v = Matrix.from_rows([[1], [-1]], RAT)
        assert quadratic_form(A, v) == -2

    def test_float_threshold(self):
        # an eigenvalue of -1e-12 on a unit-scale matrix is within tolerance
        assert is_psd(Matrix.from_numpy(np.diag([1.0, -1e-12]))).verdict
        assert not is_psd(Matrix.from_numpy(np.diag([1.0, -1e-6]))).verdict

    def test_asymmetry_certificate(self):
        A = Matrix.from_rows([[1, 2], [0, 1]], RAT)
        cert = is_psd(A)
        assert not cert.verdict and cert.asymmetry == (0, 1) and cert.validate(A)

    def test_zero_pivot_with_coupling(self):
        A = Matrix.from_rows([[0, 1], [1, 0]], RAT)
        cert = is_psd(A)
        assert not cert.verdict and cert.value < 0 and cert.validate(A)

    def test_singular_psd(self):
        A = Matrix.from_rows([[1, 1, 0], [1, 1, 0], [0, 0, 0]], RAT)
        cert = is_psd(A)
        assert cert.verdict and cert.validate(A)

    @given(st.integers(0, 2**31), st.integers(0, 3))
    def test_exact_generated_psd(self, seed, r):
        A = gen.gen_psd_exact(3, np.random.default_rng(seed), rank=r)
        cert = is_psd(A)
        assert cert.verdict and cert.validate(A)

    @given(square(GAUSS, 3))
    def test_exact_certificates_always_validate(self, X):
        A = X + conj_transpose(X)  # Hermitian, usually indefinite
        cert = is_psd(A)
        assert cert.validate(A)
        minors_ok = psd_necessary_minors(A)
        if cert.verdict:
            assert minors_ok

    @given(square(RAT, 3))
    def test_exact_agrees_with_float(self, X):
        A = mat_mul(X, conj_transpose(X)) - Matrix.diag([Fraction(1, 3)] * 3, RAT)
        exact = is_psd(A).verdict
        w = np.linalg.eigvalsh(A.to_numpy())
        if abs(w[0]) > 1e-6:
            assert exact == (w[0] > 0)

    def test_float_generated(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            A = gen.gen_psd(4, rng, rank=int(rng.integers(0, 5)))
            cert = is_psd(A)
            assert cert.verdict and cert.validate(A)
            assert psd_necessary_minors(A)

    def test_rejects_modular(self):
        with pytest.raises(DomainError):
            is_psd(Matrix.identity(2, mod(5)))


class TestSqrt:
    def test_examples(self):
        assert np.allclose(psd_sqrt(Matrix.identity(2, CF64)).to_numpy(), np.eye(2))
        assert np.allclose(psd_sqrt(Matrix.zeros(2, 2, CF64)).to_numpy(), 0)
        assert np.allclose(psd_sqrt(Matrix.from_numpy(np.diag([4.0, 9.0]))).to_numpy(), np.diag([2, 3]))

    def test_rejects_indefinite(self):
        with pytest.raises(NotPsdError):
            psd_sqrt(Matrix.from_rows([[1, 2], [2, 1]], CF64))

    def test_uniqueness_against_scipy(self):
        import scipy.linalg
        rng = np.random.default_rng(1)
        for _ in range(20):
            A = gen.gen_psd(3, rng)
            assert np.allclose(psd_sqrt(A).to_numpy(), scipy.linalg.sqrtm(A.to_numpy()), atol=1e-8)


def test_minors_examples():
    assert psd_necessary_minors(Matrix.identity(3, RAT))
    assert not psd_necessary_minors(Matrix.from_rows([[-1]], RAT))
    assert not psd_necessary_minors(Matrix.from_rows([[1, 2], [2, 1]], CF64))
    assert len(list(principal_minors(Matrix.identity(3, RAT)))) == 7


def test_approx_term():
    Z = Matrix.zeros(3, 3, RAT)
    assert psd_approx_term(Z, 1) == Matrix.identity(3, RAT)
    A = gen.gen_psd_exact(2, 3)
    prev = None
    for k in range(1, 8):
        d = sub(psd_approx_term(A, k), A)
        assert d == Matrix.diag([Fraction(1, k)] * 2, GAUSS)
        gap = max(abs(complex(x)) for x in d.entries)
        assert prev is None or gap < prev
        prev = gap
    with pytest.raises(ValueError):
        psd_approx_term(Matrix.from_rows([[0, 1], [0, 0]], RAT), 2)
    with pytest.raises(ValueError):
        psd_approx_term(Z, 0)


class TestLoewner:
    def test_examples(self):
        A = Matrix.from_rows([[2, 1], [1, 2]], RAT)
        assert loewner_leq(A, A)
        assert loewner_leq(Matrix.zeros(2, 2, RAT), A)
        assert loewner_leq(Matrix.identity(2, RAT), Matrix.diag([2, 3], RAT))
        assert not loewner_leq(Matrix.diag([2, 3], RAT), Matrix.identity(2, RAT))

    def test_zero_below_iff_psd(self):
        rng = np.random.default_rng(2)
        for _ in range(30):
            X = rng.standard_normal((3, 3))
            A = Matrix.from_numpy(X + X.T)
            assert loewner_leq(Matrix.zeros(3, 3, CF64), A) == is_psd(A).verdict

    def test_hadamard_compatibility_on_psd_cone(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            A, C = gen.gen_psd_exact(2, rng), gen.gen_psd_exact(2, rng)
            B, D = A + gen.gen_psd_exact(2, rng, rank=1), C + gen.gen_psd_exact(2, rng, rank=1)
            assert loewner_leq(hadamard(A, C), hadamard(B, D))

    def test_hadamard_compatibility_needs_the_cone(self):
        # with a non-PSD multiplier the implication breaks
        A, B = Matrix.zeros(2, 2, RAT), Matrix.identity(2, RAT)
        C = D = Matrix.diag([-1, 0], RAT)
        assert loewner_leq(A, B) and loewner_leq(C, D)
        assert not loewner_leq(hadamard(A, C), hadamard(B, D))

    def test_gap_shape(self):
        with pytest.raises(ValueError):
            loewner_gap(Matrix.identity(2, RAT), Matrix.identity(3, RAT))


def test_schur_product_exact():
    rng = np.random.default_rng(4)
    for _ in range(20):
        A, B = gen.gen_psd_exact(3, rng), gen.gen_psd_exact(3, rng, rank=1)
        assert is_psd(hadamard(A, B)).verdict
