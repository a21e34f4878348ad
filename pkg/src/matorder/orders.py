"""Order relations on matrices: entrywise, Conrad, left/right star, Loewner, identity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .ginv import MAX_CANDIDATES, SearchSpaceTooLarge, moore_penrose
from .matrix import (DEFAULT_CTX, Matrix, ProductKind, ShapeError, ToleranceContext, conj_transpose,
                     mat_eq, mat_mul, rank, require_square)
from .scalar import CF64, GAUSS, INT, RAT, DomainError, ModDomain


@dataclass(frozen=True)
class OrderKind:
    name: str
    product: Optional[ProductKind] = None

    @classmethod
    def conrad(cls, product: ProductKind = ProductKind.CONVENTIONAL) -> "OrderKind":
        if product is ProductKind.KRONECKER:
            raise ValueError("Conrad order needs a size-preserving product")
        return cls("conrad", product)

    def __str__(self):
        if self.name == "conrad" and self.product is ProductKind.HADAMARD:
            return "conrad:hadamard"
        return self.name


ENTRYWISE = OrderKind("entrywise")
CONRAD = OrderKind.conrad(ProductKind.CONVENTIONAL)
CONRAD_HADAMARD = OrderKind.conrad(ProductKind.HADAMARD)
LEFT_STAR = OrderKind("left-star")
RIGHT_STAR = OrderKind("right-star")
LOEWNER = OrderKind("loewner")
IDENTITY = OrderKind("identity")

ORDER_NAMES = {
    "entrywise": ENTRYWISE, "conrad": CONRAD, "conrad:conventional": CONRAD,
    "conrad:hadamard": CONRAD_HADAMARD, "left-star": LEFT_STAR, "right-star": RIGHT_STAR,
    "loewner": LOEWNER, "identity": IDENTITY,
}


def parse_order(name: str) -> OrderKind:
    try:
        return ORDER_NAMES[name]
    except KeyError:
        raise ValueError(f"unknown order {name!r}; expected one of {sorted(ORDER_NAMES)}") from None


def _check_pair(A: Matrix, B: Matrix) -> None:
    if A.domain != B.domain:
        raise DomainError(f"domain mismatch: {A.domain} vs {B.domain}")
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")


def _close(X: Matrix, Y: Matrix, ctx: ToleranceContext) -> bool:
    """Exact equality, or max-entry difference within eps_eq scaled by the operands."""
    if X.domain.exact:
        return X.entries == Y.entries
    x, y = X.to_numpy(), Y.to_numpy()
    scale = 1.0 + max(np.abs(x).max(), np.abs(y).max())
    return float(np.abs(x - y).max()) <= ctx.eps_eq * scale


# ---------------------------------------------------------------------------
# entrywise order on M_n(Z+)


def _nonneg_exact(A: Matrix) -> None:
    if A.domain not in (INT, RAT):
        raise DomainError(f"entrywise order is defined over nonnegative int/rat entries, got {A.domain}")
    if any(v < 0 for v in A.entries):
        raise ValueError("entrywise order is restricted to nonnegative entries")


def entrywise_leq(A: Matrix, B: Matrix) -> bool:
    _check_pair(A, B)
    _nonneg_exact(A)
    _nonneg_exact(B)
    return all(a <= b for a, b in zip(A.entries, B.entries))


def _entrywise_leq_signed(A: Matrix, B: Matrix) -> bool:
    return all(a <= b for a, b in zip(A.entries, B.entries))


def entrywise_compat_counterexample(n: int) -> tuple[Matrix, Matrix, Matrix]:
    """Integer A <= B (entrywise) with CA not <= CB, showing M_n(R) is not ordered this way.

    n = 2 searches entries in {-1, 0, 1} in lexicographic (C, A, B) order;
    every other n uses A = 0, B = E_11, C = -I.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    witness = None
    if n == 2:
        vals = (-1, 0, 1)
        mats = [Matrix(INT, n, n, t) for t in itertools.product(vals, repeat=n * n)]
        pairs = [(A, B) for A in mats for B in mats if _entrywise_leq_signed(A, B)]
        for C in mats:
            for A, B in pairs:
                if not _entrywise_leq_signed(mat_mul(C, A), mat_mul(C, B)):
                    witness = (A, B, C)
                    break
            if witness:
                break
    else:
        witness = (Matrix.zeros(n, n, INT), Matrix.unit(n, 0, 0, INT),
                   Matrix.diag([-1] * n, INT))
    A, B, C = witness
    if not (_entrywise_leq_signed(A, B) and not _entrywise_leq_signed(mat_mul(C, A), mat_mul(C, B))):
        raise AssertionError("counterexample failed re-verification")
    return A, B, C


# ---------------------------------------------------------------------------
# Conrad order:  A rho B  iff  ASA = ASB = BSA  for all S


@dataclass(frozen=True)
class ConradFailure:
    """Matrix unit E_kl at which the defining equations break, and the entry (i, j)."""

    k: int
    l: int
    i: int
    j: int
    equation: str  # "ASA=ASB" or "ASA=BSA"

    def __str__(self):
        return f"S=E_{self.k + 1}{self.l + 1}: {self.equation} fails at entry ({self.i + 1},{self.j + 1})"


def _conrad_preconditions(A: Matrix, B: Matrix, product: ProductKind) -> None:
    _check_pair(A, B)
    require_square(A, "Conrad order")
    if product is ProductKind.KRONECKER:
        raise ValueError("Conrad order needs a size-preserving product")


def conrad_witness(A: Matrix, B: Matrix, product: ProductKind = ProductKind.CONVENTIONAL,
                   ctx: ToleranceContext = DEFAULT_CTX) -> Optional[ConradFailure]:
    """First failing matrix unit, or None when A rho B.

    The equations are linear in S, so it suffices to test the n^2 units E_kl.
    Conventional: (A E_kl B)_ij = A_ik B_lj. Hadamard: (A o E_kl o B) is
    A_kl B_kl at (k, l) and zero elsewhere.
    """
    _conrad_preconditions(A, B, product)
    n = A.rows
    norm = A.domain.normalize
    a, b = A.entries, B.entries
    if A.domain.exact:
        def eq(x, y):
            return norm(x) == norm(y)
    else:
        tol = ctx.eps_eq * (1.0 + max(A.max_abs(), B.max_abs())) ** 2

        def eq(x, y):
            return abs(x - y) <= tol
    if product is ProductKind.HADAMARD:
        for k in range(n):
            for l in range(n):
                akl, bkl = a[k * n + l], b[k * n + l]
                asa = akl * akl
                if not eq(asa, akl * bkl):
                    return ConradFailure(k, l, k, l, "ASA=ASB")
                if not eq(asa, bkl * akl):
                    return ConradFailure(k, l, k, l, "ASA=BSA")
        return None
    for k in range(n):
        for l in range(n):
            for i in range(n):
                aik, bik = a[i * n + k], b[i * n + k]
                for j in range(n):
                    alj = a[l * n + j]
                    asa = aik * alj
                    if not eq(asa, aik * b[l * n + j]):
                        return ConradFailure(k, l, i, j, "ASA=ASB")
                    if not eq(asa, bik * alj):
                        return ConradFailure(k, l, i, j, "ASA=BSA")
    return None


def conrad_leq(A: Matrix, B: Matrix, product: ProductKind = ProductKind.CONVENTIONAL,
               ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    return conrad_witness(A, B, product, ctx) is None


def conrad_leq_oracle(A: Matrix, B: Matrix, product: ProductKind = ProductKind.CONVENTIONAL) -> bool:
    """Literal sweep over every S in M_n(Z_m)."""
    _conrad_preconditions(A, B, product)
    if not isinstance(A.domain, ModDomain):
        raise DomainError(f"the oracle enumerates M_n(Z_m); got {A.domain}")
    n, m = A.rows, A.domain.m
    if m ** (n * n) > MAX_CANDIDATES:
        raise SearchSpaceTooLarge(f"{m}^{n * n} matrices exceed the limit {MAX_CANDIDATES}")
    return bool(kernels.conrad_oracle(A.to_int_array(), B.to_int_array(), m,
                                      product is ProductKind.HADAMARD))


# ---------------------------------------------------------------------------
# star orders


def _star_domain(A: Matrix) -> None:
    if A.domain not in (CF64, GAUSS, RAT):
        raise DomainError(f"star orders need cf64 or gauss entries, got {A.domain}")


def range_contained(A: Matrix, B: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    """Column space of A inside column space of B."""
    if A.domain != B.domain:
        raise DomainError(f"domain mismatch: {A.domain} vs {B.domain}")
    if A.rows != B.rows:
        raise ShapeError("range inclusion needs equal row counts")
    if A.domain.exact:
        return rank(B.hstack(A)) == rank(B)
    _star_domain(A)
    a, b = A.to_numpy(), B.to_numpy()
    proj = b @ moore_penrose(B, ctx).to_numpy()
    resid = a - proj @ a
    return float(np.abs(resid).max()) <= ctx.eps_eq * (1.0 + np.abs(a).max())


def left_star_leq(A: Matrix, B: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    """A*A = A*B and R(A) in R(B)."""
    _check_pair(A, B)
    _star_domain(A)
    Ah = conj_transpose(A)
    return _close(mat_mul(Ah, A), mat_mul(Ah, B), ctx) and range_contained(A, B, ctx)


def right_star_leq(A: Matrix, B: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    """AA* = BA* and R(A*) in R(B*)."""
    _check_pair(A, B)
    _star_domain(A)
    Ah = conj_transpose(A)
    return (_close(mat_mul(A, Ah), mat_mul(B, Ah), ctx)
            and range_contained(Ah, conj_transpose(B), ctx))


def left_star_failure(A: Matrix, B: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> Optional[str]:
    Ah = conj_transpose(A)
    if not _close(mat_mul(Ah, A), mat_mul(Ah, B), ctx):
        return "A*A != A*B"
    if not range_contained(A, B, ctx):
        return "R(A) not contained in R(B)"
    return None


def right_star_failure(A: Matrix, B: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> Optional[str]:
    Ah = conj_transpose(A)
    if not _close(mat_mul(A, Ah), mat_mul(B, Ah), ctx):
        return "AA* != BA*"
    if not range_contained(Ah, conj_transpose(B), ctx):
        return "R(A*) not contained in R(B*)"
    return None


def star_compat_counterexample(domain=GAUSS) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """A, B, C, D with A *<= B and C *<= D (C = D) but AC not *<= BD.

    The image of AC = diag(1, 0) C leaves the image of BD = C.
    """
    A = Matrix.from_rows([[1, 0], [0, 0]], domain)
    B = Matrix.identity(2, domain)
    C = Matrix.from_rows([[1, 0], [1, 0]], domain)
    return A, B, C, C


# ---------------------------------------------------------------------------
# dispatch


def leq(A: Matrix, B: Matrix, kind: OrderKind, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    from .psd import loewner_leq

    if kind == IDENTITY:
        _check_pair(A, B)
        return mat_eq(A, B, ctx)
    if kind == ENTRYWISE:
        return entrywise_leq(A, B)
    if kind.name == "conrad":
        return conrad_leq(A, B, kind.product, ctx)
    if kind == LEFT_STAR:
        return left_star_leq(A, B, ctx)
    if kind == RIGHT_STAR:
        return right_star_leq(A, B, ctx)
    if kind == LOEWNER:
        return loewner_leq(A, B, ctx)
    raise ValueError(f"unknown order {kind!r}")
