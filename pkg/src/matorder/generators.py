"""Seeded random instances with a known order relation built in."""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from .matrix import Matrix, conj_transpose, inverse, mat_mul, rank, sub
from .scalar import CF64, GAUSS, GaussianRational


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def complex_normal(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


# ---------------------------------------------------------------------------
# PSD


def psd_from_factor(M: Matrix) -> Matrix:
    """M* M."""
    return mat_mul(conj_transpose(M), M)


def gen_psd(n: int, seed=None, rank: Optional[int] = None) -> Matrix:
    """M* M for a random complex M with ``rank`` rows (default n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = _rng(seed)
    k = n if rank is None else rank
    if k == 0:
        return Matrix.zeros(n, n, CF64)
    M = complex_normal(k, n, rng)
    a = M.conj().T @ M
    return Matrix.from_numpy((a + a.conj().T) / 2)


def gen_psd_exact(n: int, seed=None, rank: Optional[int] = None, bound: int = 3) -> Matrix:
    rng = _rng(seed)
    k = n if rank is None else rank
    if k == 0:
        return Matrix.zeros(n, n, GAUSS)
    return psd_from_factor(random_gauss(k, n, rng, bound))


# ---------------------------------------------------------------------------
# left star pairs, float


def _spectral_projector(B: np.ndarray, mask: np.ndarray) -> np.ndarray:
    n = B.shape[1]
    if mask.all():
        return np.eye(n, dtype=np.complex128)
    if not mask.any():
        return np.zeros((n, n), dtype=np.complex128)
    _, V = np.linalg.eigh(B.conj().T @ B)
    Vs = V[:, mask]
    return Vs @ Vs.conj().T


def _mask(n: int, rng: np.random.Generator, subset: Optional[Iterable[int]]) -> np.ndarray:
    if subset is None:
        return rng.random(n) < 0.5
    mask = np.zeros(n, dtype=bool)
    mask[list(subset)] = True
    return mask


def star_below(B: Matrix, seed=None, subset: Optional[Iterable[int]] = None) -> Matrix:
    """A = B H with H the projector onto chosen eigenvectors of B*B.

    H commutes with B*B, so A*B - A*A = H B*B (I - H) = 0 and R(A) lies in R(B).
    ``subset`` indexes eigenvectors in ascending eigenvalue order.
    """
    rng = _rng(seed)
    b = B.to_numpy()
    H = _spectral_projector(b, _mask(B.cols, rng, subset))
    return Matrix.from_numpy(b @ H)


def gen_star_pair(n: int, seed=None, subset: Optional[Iterable[int]] = None) -> tuple[Matrix, Matrix]:
    """Random (A, B) over cf64 with A left-star-below B, re-verified."""
    from .orders import left_star_leq

    if n < 1:
        raise ValueError("n must be >= 1")
    rng = _rng(seed)
    B = Matrix.from_numpy(complex_normal(n, n, rng))
    A = star_below(B, rng, subset)
    if not left_star_leq(A, B):
        raise AssertionError("generated star pair failed re-verification")
    return A, B


def gen_star_chain(n: int, seed=None) -> tuple[Matrix, Matrix, Matrix]:
    """A *<= B *<= C by two successive projections."""
    rng = _rng(seed)
    C = Matrix.from_numpy(complex_normal(n, n, rng))
    B = star_below(C, rng)
    A = star_below(B, rng)
    return A, B, C


# ---------------------------------------------------------------------------
# exact Gaussian-rational instances


def random_gauss(rows: int, cols: int, seed=None, bound: int = 3) -> Matrix:
    """Gaussian integers with real and imaginary parts in [-bound, bound]."""
    rng = _rng(seed)
    re = rng.integers(-bound, bound + 1, size=rows * cols)
    im = rng.integers(-bound, bound + 1, size=rows * cols)
    return Matrix(GAUSS, rows, cols, tuple(GaussianRational(int(a), int(b)) for a, b in zip(re, im)))


def gauss_of_rank(n: int, r: int, seed=None, bound: int = 2) -> Matrix:
    """Random n x n Gaussian-integer matrix of exact rank r."""
    rng = _rng(seed)
    if r == 0:
        return Matrix.zeros(n, n, GAUSS)
    while True:
        M = mat_mul(random_gauss(n, r, rng, bound), random_gauss(r, n, rng, bound))
        if rank(M) == r:
            return M


def cayley_unitary(n: int, seed=None, bound: int = 2) -> Matrix:
    """(I - K)(I + K)^-1 for a random skew-Hermitian Gaussian-integer K; exactly unitary."""
    rng = _rng(seed)
    X = random_gauss(n, n, rng, bound)
    K = sub(X, conj_transpose(X))
    I = Matrix.identity(n, GAUSS)
    return mat_mul(sub(I, K), inverse(I + K))


def orthogonal_columns(n: int, seed=None, zero_cols: Iterable[int] = (), bound: int = 2) -> Matrix:
    """Gram-Schmidt without normalisation: mutually orthogonal exact columns."""
    rng = _rng(seed)
    X = random_gauss(n, n, rng, bound)
    cols: list[list] = []
    zero_cols = set(zero_cols)
    for j in range(n):
        if j in zero_cols:
            cols.append([GaussianRational(0)] * n)
            continue
        x = list(X.col(j))
        y = x[:]
        for c in cols:
            cc = sum((ci.conjugate() * ci for ci in c), GaussianRational(0))
            if not cc:
                continue
            coef = sum((ci.conjugate() * xi for ci, xi in zip(c, x)), GaussianRational(0)) / cc
            y = [yi - coef * ci for yi, ci in zip(y, c)]
        cols.append(y)
    return Matrix(GAUSS, n, n, tuple(cols[j][i] for i in range(n) for j in range(n)))


class ExactStarFamily:
    """Matrices Y S V* sharing one exact unitary V.

    With Y's columns orthogonal, (Y V*)* (Y V*) = V (Y*Y) V* is diagonalised
    by V, so for 0/1 diagonal selectors S1 >= S2 the matrices
    Y S2 V* *<= Y S1 V* exactly.
    """

    def __init__(self, n: int, seed=None, rank_deficient: bool = False):
        rng = _rng(seed)
        self.n = n
        zero = [int(rng.integers(n))] if rank_deficient else []
        self.Y = orthogonal_columns(n, rng, zero)
        self.V = cayley_unitary(n, rng)
        self.Vh = conj_transpose(self.V)
        self._rng = rng

    def select(self, keep: Iterable[int]) -> Matrix:
        keep = set(keep)
        S = Matrix.diag([1 if i in keep else 0 for i in range(self.n)], GAUSS)
        return mat_mul(mat_mul(self.Y, S), self.Vh)

    def random_subset(self, within: Optional[Iterable[int]] = None) -> list[int]:
        pool = list(range(self.n)) if within is None else sorted(within)
        return [i for i in pool if self._rng.random() < 0.5]


def gen_star_pair_exact(n: int, seed=None) -> tuple[Matrix, Matrix]:
    from .orders import left_star_leq

    rng = _rng(seed)
    fam = ExactStarFamily(n, rng, rank_deficient=bool(rng.integers(2)))
    A, B = fam.select(fam.random_subset()), fam.select(range(n))
    if not left_star_leq(A, B):
        raise AssertionError("generated star pair failed re-verification")
    return A, B


def gen_star_chain_exact(n: int, seed=None) -> tuple[Matrix, Matrix, Matrix]:
    rng = _rng(seed)
    fam = ExactStarFamily(n, rng, rank_deficient=bool(rng.integers(2)))
    s1 = fam.random_subset()
    s2 = fam.random_subset(s1)
    return fam.select(s2), fam.select(s1), fam.select(range(n))
