import numpy as np
import pytest
from hypothesis import given, strategies as st

from matorder import generators as gen
from matorder.matrix import Matrix, conj_transpose, mat_mul, max_abs_diff, rank
from matorder.orders import left_star_leq
from matorder.psd import is_psd
from matorder.scalar import CF64, GAUSS

seeds = st.integers(0, 2**31)


def test_psd_from_factor_examples():
    assert gen.psd_from_factor(Matrix.zeros(2, 2, GAUSS)).is_zero()
    assert gen.psd_from_factor(Matrix.identity(2, GAUSS)) == Matrix.identity(2, GAUSS)


@given(seeds, st.integers(0, 4))
def test_gen_psd(seed, r):
    A = gen.gen_psd(4, seed, rank=r)
    assert is_psd(A).verdict
    assert np.linalg.matrix_rank(A.to_numpy(), tol=1e-8) == r


def test_gen_psd_is_seeded():
    assert gen.gen_psd(3, 42) == gen.gen_psd(3, 42)
    assert gen.gen_psd(3, 42) != gen.gen_psd(3, 43)


def test_star_pair_extremes():
    _, B = gen.gen_star_pair(3, 5)
    A_all, B_all = gen.gen_star_pair(3, 5, subset=range(3))
    assert max_abs_diff(A_all, B_all) < 1e-12
    A0, B0 = gen.gen_star_pair(3, 5, subset=[])
    assert A0.max_abs() == 0.0


@given(seeds)
def test_star_pair_verifies(seed):
    A, B = gen.gen_star_pair(3, seed)
    assert left_star_leq(A, B)


@given(seeds)
def test_star_chain(seed):
    A, B, C = gen.gen_star_chain(3, seed)
    assert left_star_leq(A, B) and left_star_leq(B, C) and left_star_leq(A, C)


def test_cayley_unitary_exact():
    for seed in range(5):
        V = gen.cayley_unitary(3, seed)
        assert mat_mul(conj_transpose(V), V) == Matrix.identity(3, GAUSS)


def test_orthogonal_columns_exact():
    Y = gen.orthogonal_columns(3, 1, zero_cols=[1])
    G = mat_mul(conj_transpose(Y), Y)
    assert all(G[i, j] == 0 for i in range(3) for j in range(3) if i != j)
    assert G[1, 1] == 0 and rank(Y) == 2


@given(seeds)
def test_exact_star_pair_and_chain(seed):
    rng = np.random.default_rng(seed)
    A, B = gen.gen_star_pair_exact(3, rng)
    assert left_star_leq(A, B)
    X, Y, Z = gen.gen_star_chain_exact(3, rng)
    assert left_star_leq(X, Y) and left_star_leq(Y, Z) and left_star_leq(X, Z)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_gauss_of_rank(r):
    assert rank(gen.gauss_of_rank(3, r, r)) == r


def test_rejects_bad_size():
    with pytest.raises(ValueError):
        gen.gen_psd(0)
    with pytest.raises(ValueError):
        gen.gen_star_pair(0)
