"""Positive semidefinite matrices and the Loewner order."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

import numpy as np

from .matrix import (DEFAULT_CTX, Matrix, ShapeError, ToleranceContext, add, conj_transpose, det,
                     inverse, mat_mul, require_square, sub)
from .scalar import CF64, GAUSS, RAT, DomainError, GaussianRational

MAX_MINOR_ORDER = 12


class NotPsdError(ValueError):
    pass


@dataclass(frozen=True)
class PsdCertificate:
    """Outcome of :func:`is_psd` with a checkable witness.

    Positive, float:  ``factor`` L with LL* ~ A.
    Positive, exact:  ``factor`` unit lower-triangular L and ``pivots`` D >= 0
                      with L diag(D) L* = A exactly (square roots of D are
                      generally irrational).
    Negative:         ``vector`` v (n x 1) with v*Av = ``value`` < 0, or
                      ``asymmetry`` (i, j) with a_ij != conj(a_ji).
    """

    verdict: bool
    factor: Optional[Matrix] = None
    pivots: Optional[tuple] = None
    vector: Optional[Matrix] = None
    value: Any = None
    asymmetry: Optional[tuple[int, int]] = None
    min_eigenvalue: Optional[float] = None

    def __bool__(self):
        return self.verdict

    def validate(self, A: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
        if self.verdict:
            if self.factor is None:
                return False
            L = self.factor
            if self.pivots is not None:
                D = Matrix.diag(list(self.pivots), A.domain)
                return (all(_real_part(d) >= 0 for d in self.pivots)
                        and mat_mul(mat_mul(L, D), conj_transpose(L)) == A)
            recon = L.to_numpy() @ L.to_numpy().conj().T
            a = A.to_numpy()
            tol = 10 * (ctx.eps_psd + ctx.eps_eq) * (1.0 + np.abs(a).max())
            return float(np.abs(recon - a).max()) <= tol
        if self.asymmetry is not None:
            i, j = self.asymmetry
            if A.domain.exact:
                return A[i, j] != A.domain.conj(A[j, i])
            return not is_hermitian(A, ctx)
        if self.vector is None:
            return False
        q = quadratic_form(A, self.vector)
        return _real_part(q) < 0


def _real_part(x):
    if isinstance(x, GaussianRational):
        return x.re
    if isinstance(x, complex):
        return x.real
    return x


def quadratic_form(A: Matrix, v: Matrix):
    """v* A v as a scalar."""
    return mat_mul(mat_mul(conj_transpose(v), A), v)[0, 0]


def _psd_domain(A: Matrix) -> None:
    if A.domain not in (CF64, GAUSS, RAT):
        raise DomainError(f"PSD tests need cf64 or gauss entries, got {A.domain}")


def _norm_max(a: np.ndarray) -> float:
    return float(np.abs(a).max())


def is_hermitian(A: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    require_square(A, "is_hermitian")
    if A.domain.exact:
        return A == conj_transpose(A)
    a = A.to_numpy()
    return _norm_max(a - a.conj().T) <= ctx.eps_eq * (1.0 + _norm_max(a))


def _asymmetry(A: Matrix) -> tuple[int, int]:
    n = A.rows
    conj = A.domain.conj
    if A.domain.exact:
        return next((i, j) for i in range(n) for j in range(i, n) if A[i, j] != conj(A[j, i]))
    a = A.to_numpy()
    d = np.abs(a - a.conj().T)
    i, j = np.unravel_index(np.argmax(d), d.shape)
    return (int(min(i, j)), int(max(i, j)))


def is_psd(A: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> PsdCertificate:
    require_square(A, "is_psd")
    _psd_domain(A)
    if not is_hermitian(A, ctx):
        return PsdCertificate(False, asymmetry=_asymmetry(A))
    if A.domain.exact:
        return _is_psd_exact(A)
    return _is_psd_float(A, ctx)


def _is_psd_float(A: Matrix, ctx: ToleranceContext) -> PsdCertificate:
    a = A.to_numpy()
    h = (a + a.conj().T) / 2
    w, V = np.linalg.eigh(h)
    thr = ctx.eps_psd * (1.0 + _norm_max(a))
    lam = float(w[0])
    if lam >= -thr:
        L = V * np.sqrt(np.clip(w, 0.0, None))
        return PsdCertificate(True, factor=Matrix.from_numpy(L), min_eigenvalue=lam)
    v = Matrix.from_numpy(V[:, :1])
    return PsdCertificate(False, vector=v, value=quadratic_form(A, v), min_eigenvalue=lam)


def _is_psd_exact(A: Matrix) -> PsdCertificate:
    """In-order symmetric elimination: A = L diag(D) L* or a negative direction."""
    n = A.rows
    dom = A.domain
    zero, one = dom.zero(), dom.one()
    S = [list(A.row(i)) for i in range(n)]
    L = [[one if i == j else zero for j in range(n)] for i in range(n)]
    D = [zero] * n
    positive: list[int] = []
    for k in range(n):
        d = S[k][k]
        dr = _real_part(d)
        if dr < 0:
            return _exact_negative(A, positive, {k: one})
        if dr == 0:
            j = next((j for j in range(k + 1, n) if S[k][j]), None)
            if j is not None:
                s = S[k][j]
                c = _real_part(S[j][j])
                norm2 = s.norm2() if isinstance(s, GaussianRational) else Fraction(s) ** 2
                t = (abs(c) + 1) / norm2
                alpha = -t * s
                return _exact_negative(A, positive, {k: alpha, j: one})
            continue
        positive.append(k)
        D[k] = d
        inv = dom.inv(d)
        for i in range(k + 1, n):
            L[i][k] = S[i][k] * inv
        for i in range(k + 1, n):
            f = S[i][k] * inv
            if f:
                for j in range(k + 1, n):
                    S[i][j] = S[i][j] - f * S[k][j]
        for i in range(k + 1, n):
            S[i][k] = zero
            S[k][i] = zero
    factor = Matrix(dom, n, n, tuple(v for r in L for v in r))
    return PsdCertificate(True, factor=factor, pivots=tuple(D))


def _exact_negative(A: Matrix, positive: list[int], w: dict) -> PsdCertificate:
    """Lift a negative direction of the current Schur complement back to A."""
    n = A.rows
    dom = A.domain
    rest = [i for i in range(n) if i not in positive]
    v = [dom.zero()] * n
    for i, val in w.items():
        v[i] = dom.coerce(val)
    if positive:
        App = A.submatrix(positive, positive)
        ApR = A.submatrix(positive, rest)
        wR = Matrix(dom, len(rest), 1, tuple(v[i] for i in rest))
        vP = mat_mul(inverse(App), mat_mul(ApR, wR))
        for idx, p in enumerate(positive):
            v[p] = -vP[idx, 0]
    vec = Matrix(dom, n, 1, tuple(v))
    q = quadratic_form(A, vec)
    if not _real_part(q) < 0:
        raise AssertionError("negative direction failed re-verification")
    return PsdCertificate(False, vector=vec, value=q)


def psd_sqrt(A: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> Matrix:
    """The PSD square root, from the spectral decomposition with clamped eigenvalues."""
    if A.domain != CF64:
        raise DomainError(f"psd_sqrt works over cf64, got {A.domain}")
    if not is_psd(A, ctx):
        raise NotPsdError("matrix is not positive semidefinite")
    a = A.to_numpy()
    w, V = np.linalg.eigh((a + a.conj().T) / 2)
    w = np.clip(w, 0.0, None)
    B = (V * np.sqrt(w)) @ V.conj().T
    return Matrix.from_numpy((B + B.conj().T) / 2)


def principal_minors(A: Matrix):
    """Yield (index subset, determinant) for every non-empty principal submatrix."""
    n = A.rows
    for k in range(1, n + 1):
        for sub_idx in itertools.combinations(range(n), k):
            yield sub_idx, det(A.submatrix(sub_idx, sub_idx))


def psd_necessary_minors(A: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    """Every principal minor (diagonal entries and det included) is nonnegative."""
    n = require_square(A, "psd_necessary_minors")
    if n > MAX_MINOR_ORDER:
        raise ValueError(f"principal minor enumeration is limited to n <= {MAX_MINOR_ORDER}")
    if A.domain.exact:
        for _, m in principal_minors(A):
            if isinstance(m, GaussianRational):
                if m.im != 0 or m.re < 0:
                    return False
            elif m < 0:
                return False
        return True
    a = A.to_numpy()
    scale = 1.0 + _norm_max(a)
    for k in range(1, n + 1):
        subs = list(itertools.combinations(range(n), k))
        idx = np.array(subs)
        d = np.linalg.det(a[idx[:, :, None], idx[:, None, :]])
        tol = ctx.eps_psd * scale ** k
        if (d.real < -tol).any() or (np.abs(d.imag) > tol).any():
            return False
    return True


def psd_approx_term(A: Matrix, k: int) -> Matrix:
    """A + (1/k) I."""
    n = require_square(A, "psd_approx_term")
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    if A.domain == CF64:
        inc = 1.0 / k
    elif A.domain in (RAT, GAUSS):
        inc = Fraction(1, k)
    else:
        raise DomainError(f"A + I/k needs cf64, rat or gauss entries, got {A.domain}")
    if not is_hermitian(A):
        raise ValueError("psd_approx_term expects a Hermitian matrix")
    return add(A, Matrix.diag([inc] * n, A.domain))


def loewner_leq(A: Matrix, B: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    """B - A is Hermitian positive semidefinite."""
    return is_psd(loewner_gap(A, B), ctx).verdict


def loewner_gap(A: Matrix, B: Matrix) -> Matrix:
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")
    require_square(A, "Loewner order")
    _psd_domain(A)
    return sub(B, A)
