"""Inner, outer and reflexive inverses, and the Moore-Penrose inverse."""

from __future__ import annotations

import enum

import numpy as np

from . import kernels
from .matrix import (DEFAULT_CTX, Matrix, ShapeError, ToleranceContext, conj_transpose,
                     inverse, mat_eq, mat_mul, require_square, rref)
from .scalar import GAUSS, RAT, DomainError, ModDomain

MAX_CANDIDATES = 10**6


class InverseKind(enum.Enum):
    INNER = "inner"        # A X A = A         (the set A{1})
    OUTER = "outer"        # X A X = X         (the set A{2})
    REFLEXIVE = "reflexive"  # both            (the set A{1,2})


class SearchSpaceTooLarge(ValueError):
    pass


def is_inverse(A: Matrix, X: Matrix, kind: InverseKind, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    n = require_square(A, "is_inverse")
    if X.shape != (n, n):
        raise ShapeError(f"candidate must be {n}x{n}, got {X.rows}x{X.cols}")
    if A.domain != X.domain:
        raise DomainError(f"domain mismatch: {A.domain} vs {X.domain}")
    if kind in (InverseKind.INNER, InverseKind.REFLEXIVE):
        if not mat_eq(mat_mul(mat_mul(A, X), A), A, ctx):
            return False
    if kind in (InverseKind.OUTER, InverseKind.REFLEXIVE):
        if not mat_eq(mat_mul(mat_mul(X, A), X), X, ctx):
            return False
    return True


def enumerate_inverses(A: Matrix, kind: InverseKind) -> list[Matrix]:
    """Every X in M_n(Z_m) of the requested kind, in lexicographic entry order.

    A non-regular A simply yields an empty list for the inner kinds.
    """
    if not isinstance(A.domain, ModDomain):
        raise DomainError(f"enumeration needs a finite Mod(m) domain, got {A.domain}")
    n = require_square(A, "enumerate_inverses")
    m = A.domain.m
    if m ** (n * n) > MAX_CANDIDATES:
        raise SearchSpaceTooLarge(f"{m}^{n * n} candidates exceed the limit {MAX_CANDIDATES}")
    inner = kind in (InverseKind.INNER, InverseKind.REFLEXIVE)
    outer = kind in (InverseKind.OUTER, InverseKind.REFLEXIVE)
    hits = kernels.inverse_search(A.to_int_array(), m, inner, outer)
    if len(hits) == 0:
        return []
    block = np.concatenate([kernels.candidate_block(int(t), int(t) + 1, m, n) for t in hits])
    return [Matrix(A.domain, n, n, tuple(int(v) for v in x.ravel())) for x in block]


def moore_penrose(A: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> Matrix:
    """A-dagger: the X with AXA = A, XAX = X and both AX, XA Hermitian."""
    dom = A.domain
    if not dom.exact:
        return _pinv_svd(A, ctx)
    if dom not in (RAT, GAUSS):
        raise DomainError(f"Moore-Penrose inverse is not available over {dom}")
    return _pinv_full_rank(A)


def _pinv_svd(A: Matrix, ctx: ToleranceContext) -> Matrix:
    a = A.to_numpy()
    U, s, Vh = np.linalg.svd(a, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return Matrix.from_numpy(np.zeros((A.cols, A.rows), dtype=np.complex128))
    keep = s > ctx.eps_rank * s[0]
    inv_s = np.where(keep, 1.0 / np.where(keep, s, 1.0), 0.0)
    return Matrix.from_numpy((Vh.conj().T * inv_s) @ U.conj().T)


def full_rank_factorization(A: Matrix) -> tuple[Matrix, Matrix]:
    """A = F G with F the pivot columns of A and G the nonzero rows of rref(A)."""
    R, piv = rref(A)
    r = len(piv)
    if r == 0:
        raise ValueError("zero matrix has no full-rank factorization")
    F = A.submatrix(range(A.rows), piv)
    G = R.submatrix(range(r), range(A.cols))
    return F, G


def _pinv_full_rank(A: Matrix) -> Matrix:
    if A.is_zero():
        return Matrix.zeros(A.cols, A.rows, A.domain)
    F, G = full_rank_factorization(A)
    Fh, Gh = conj_transpose(F), conj_transpose(G)
    # G* (G G*)^-1 (F* F)^-1 F*
    return mat_mul(mat_mul(Gh, inverse(mat_mul(G, Gh))), mat_mul(inverse(mat_mul(Fh, F)), Fh))


def penrose_residuals(A: Matrix, X: Matrix) -> tuple[float, float, float, float]:
    """Relative max-entry residuals of the four Penrose equations (float view)."""
    a, x = A.to_numpy(), X.to_numpy()
    ax, xa = a @ x, x @ a
    sa = 1.0 + np.abs(a).max()
    sx = 1.0 + np.abs(x).max()
    return (
        float(np.abs(ax @ a - a).max() / sa),
        float(np.abs(xa @ x - x).max() / sx),
        float(np.abs(ax - ax.conj().T).max() / (1.0 + np.abs(ax).max())),
        float(np.abs(xa - xa.conj().T).max() / (1.0 + np.abs(xa).max())),
    )


def satisfies_penrose(A: Matrix, X: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    if X.shape != (A.cols, A.rows) or X.domain != A.domain:
        return False
    if not A.domain.exact:
        return max(penrose_residuals(A, X)) <= ctx.eps_eq
    AX, XA = mat_mul(A, X), mat_mul(X, A)
    return (mat_mul(AX, A) == A and mat_mul(XA, X) == X
            and conj_transpose(AX) == AX and conj_transpose(XA) == XA)


def is_regular_element(a: int, S) -> bool:
    """True iff a x a = a for some x in the finite semigroup S."""
    a = S.check_index(a)
    T = S.table
    return bool((T[T[a, :], a] == a).any())
