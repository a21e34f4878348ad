"""Dense matrices over a single scalar domain and the three semigroup products."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

import numpy as np

from .scalar import CF64, INT, RAT, Domain, DomainError, ModDomain, Scalar


class ShapeError(ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


class ProductKind(enum.Enum):
    CONVENTIONAL = "conventional"
    HADAMARD = "hadamard"
    KRONECKER = "kronecker"


@dataclass(frozen=True)
class ToleranceContext:
    """Thresholds for float comparisons. Exact domains never read them."""

    eps_eq: float = 1e-9
    eps_psd: float = 1e-9
    eps_rank: float = 1e-10

    def __post_init__(self):
        for name in ("eps_eq", "eps_psd", "eps_rank"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v >= 0):
                raise ValueError(f"{name} must be a finite nonnegative number, got {v!r}")


DEFAULT_CTX = ToleranceContext()


@dataclass(frozen=True, eq=False)
class Matrix:
    """Immutable row-major matrix. Build with :meth:`from_rows` or the constructors below."""

    domain: Domain
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], domain: Domain) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ShapeError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(domain, len(rows), ncols, tuple(domain.coerce(v) for r in rows for v in r))

    @classmethod
    def from_flat(cls, rows: int, cols: int, values: Iterable[Any], domain: Domain) -> "Matrix":
        return cls(domain, rows, cols, tuple(domain.coerce(v) for v in values))

    @classmethod
    def identity(cls, n: int, domain: Domain) -> "Matrix":
        one, zero = domain.one(), domain.zero()
        return cls(domain, n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int, domain: Domain) -> "Matrix":
        return cls(domain, rows, cols, (domain.zero(),) * (rows * cols))

    @classmethod
    def ones(cls, rows: int, cols: int, domain: Domain) -> "Matrix":
        return cls(domain, rows, cols, (domain.one(),) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[Any], domain: Domain) -> "Matrix":
        n = len(values)
        zero = domain.zero()
        vals = [domain.coerce(v) for v in values]
        return cls(domain, n, n, tuple(vals[i] if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, k: int, l: int, domain: Domain) -> "Matrix":
        """The matrix unit E_kl (single one at row k, column l)."""
        zero, one = domain.zero(), domain.one()
        return cls(domain, n, n, tuple(one if (i, j) == (k, l) else zero for i in range(n) for j in range(n)))

    @classmethod
    def from_numpy(cls, arr: np.ndarray) -> "Matrix":
        arr = np.asarray(arr, dtype=np.complex128)
        if arr.ndim != 2:
            raise ShapeError("expected a 2-d array")
        if not np.all(np.isfinite(arr)):
            raise DomainError("non-finite entries are not admitted")
        return cls(CF64, arr.shape[0], arr.shape[1], tuple(complex(x) for x in arr.ravel()))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.domain, self[i, j])

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_numpy(self) -> np.ndarray:
        """Complex128 copy (approximate for exact domains)."""
        return np.array([complex(v) for v in self.entries], dtype=np.complex128).reshape(self.rows, self.cols)

    def to_int_array(self) -> np.ndarray:
        if not isinstance(self.domain, (ModDomain, type(INT))):
            raise DomainError(f"{self.domain} has no integer array form")
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def max_abs(self) -> float:
        return max(abs(complex(v)) for v in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        e = self.entries
        c = self.cols
        return Matrix(self.domain, len(rows), len(cols), tuple(e[i * c + j] for i in rows for j in cols))

    def hstack(self, other: "Matrix") -> "Matrix":
        _same_domain(self, other)
        if self.rows != other.rows:
            raise ShapeError("hstack needs equal row counts")
        ent = []
        for i in range(self.rows):
            ent.extend(self.row(i))
            ent.extend(other.row(i))
        return Matrix(self.domain, self.rows, self.cols + other.cols, tuple(ent))

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- python protocol ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.domain == other.domain and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.domain, self.rows, self.cols, self.entries))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return scale(self, -1)

    @property
    def H(self) -> "Matrix":
        return conj_transpose(self)

    def to_text(self) -> str:
        fmt = self.domain.format
        lines = [f"{self.domain.tag} {self.rows} {self.cols}"]
        for i in range(self.rows):
            lines.append(" ".join(fmt(v) for v in self.row(i)))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Matrix({self.domain.tag}, {self.tolist()!r})"


# ---------------------------------------------------------------------------
# helpers


def _same_domain(A: Matrix, B: Matrix) -> None:
    if A.domain != B.domain:
        raise DomainError(f"domain mismatch: {A.domain} vs {B.domain}")


def _same_shape(A: Matrix, B: Matrix) -> None:
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")


def _wrap(domain: Domain, rows: int, cols: int, values: Iterable[Any]) -> Matrix:
    norm = domain.normalize
    return Matrix(domain, rows, cols, tuple(norm(v) for v in values))


def _from_array(arr: np.ndarray) -> Matrix:
    return Matrix.from_numpy(arr)


def require_square(A: Matrix, what: str = "operation") -> int:
    if not A.is_square:
        raise ShapeError(f"{what} needs a square matrix, got {A.rows}x{A.cols}")
    return A.rows


# ---------------------------------------------------------------------------
# products


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _same_domain(A, B)
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    if not A.domain.exact:
        return _from_array(A.to_numpy() @ B.to_numpy())
    cols = [B.col(j) for j in range(B.cols)]
    out = []
    for i in range(A.rows):
        r = A.row(i)
        for c in cols:
            out.append(sum(a * b for a, b in zip(r, c)))
    return _wrap(A.domain, A.rows, B.cols, out)


def hadamard(A: Matrix, B: Matrix) -> Matrix:
    _same_domain(A, B)
    _same_shape(A, B)
    return _wrap(A.domain, A.rows, A.cols, (a * b for a, b in zip(A.entries, B.entries)))


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    _same_domain(A, B)
    out = []
    for i in range(A.rows):
        arow = A.row(i)
        for k in range(B.rows):
            brow = B.row(k)
            for a in arow:
                out.extend(a * b for b in brow)
    return _wrap(A.domain, A.rows * B.rows, A.cols * B.cols, out)


def product(A: Matrix, B: Matrix, kind: ProductKind) -> Matrix:
    if kind is ProductKind.CONVENTIONAL:
        return mat_mul(A, B)
    if kind is ProductKind.HADAMARD:
        return hadamard(A, B)
    if kind is ProductKind.KRONECKER:
        return kronecker(A, B)
    raise ValueError(f"unknown product {kind!r}")


def conj_transpose(A: Matrix) -> Matrix:
    conj = A.domain.conj
    return Matrix(A.domain, A.cols, A.rows, tuple(conj(v) for j in range(A.cols) for v in A.col(j)))


def add(A: Matrix, B: Matrix) -> Matrix:
    _same_domain(A, B)
    _same_shape(A, B)
    return _wrap(A.domain, A.rows, A.cols, (a + b for a, b in zip(A.entries, B.entries)))


def sub(A: Matrix, B: Matrix) -> Matrix:
    _same_domain(A, B)
    _same_shape(A, B)
    return _wrap(A.domain, A.rows, A.cols, (a - b for a, b in zip(A.entries, B.entries)))


def scale(A: Matrix, c: Any) -> Matrix:
    c = A.domain.coerce(c) if not isinstance(c, int) else c
    return _wrap(A.domain, A.rows, A.cols, (c * a for a in A.entries))


def mat_eq(A: Matrix, B: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> bool:
    _same_domain(A, B)
    _same_shape(A, B)
    if A.domain.exact:
        return A.entries == B.entries
    return max_abs_diff(A, B) <= ctx.eps_eq


def max_abs_diff(A: Matrix, B: Matrix) -> float:
    _same_shape(A, B)
    return max(abs(complex(a) - complex(b)) for a, b in zip(A.entries, B.entries))


# ---------------------------------------------------------------------------
# exact linear algebra over fields


def _field_domain(A: Matrix, what: str) -> Domain:
    """Domain to compute in; Int is promoted to the rationals."""
    dom = A.domain
    if dom == INT:
        return RAT
    if isinstance(dom, ModDomain) and not dom.is_field:
        raise DomainError(f"{what} needs a field; mod:{dom.m} has composite modulus")
    if not dom.is_field:
        raise DomainError(f"{what} is not supported over {dom}")
    return dom


def _rref_rows(rows: list[list[Any]], dom: Domain) -> tuple[list[list[Any]], list[int]]:
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    norm = dom.normalize
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = dom.inv(rows[r][c])
        rows[r] = [norm(v * inv) for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [norm(a - f * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (exact fields only)."""
    dom = _field_domain(A, "rref")
    rows = [[dom.coerce(v) for v in A.row(i)] for i in range(A.rows)]
    R, piv = _rref_rows(rows, dom)
    return Matrix(dom, A.rows, A.cols, tuple(v for r in R for v in r)), piv


def rank(A: Matrix, ctx: ToleranceContext = DEFAULT_CTX) -> int:
    if not A.domain.exact:
        s = np.linalg.svd(A.to_numpy(), compute_uv=False)
        if s.size == 0 or s[0] == 0.0:
            return 0
        return int(np.count_nonzero(s > ctx.eps_rank * s[0]))
    return len(rref(A)[1])


def inverse(A: Matrix) -> Matrix:
    n = require_square(A, "inverse")
    if not A.domain.exact:
        return _from_array(np.linalg.inv(A.to_numpy()))
    dom = _field_domain(A, "inverse")
    one, zero = dom.one(), dom.zero()
    rows = [[dom.coerce(v) for v in A.row(i)] + [one if i == j else zero for j in range(n)]
            for i in range(n)]
    R, piv = _rref_rows(rows, dom)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(dom, n, n, tuple(v for r in R for v in r[n:]))


def det(A: Matrix) -> Any:
    n = require_square(A, "det")
    if not A.domain.exact:
        return complex(np.linalg.det(A.to_numpy()))
    dom = _field_domain(A, "det")
    norm = dom.normalize
    rows = [[dom.coerce(v) for v in A.row(i)] for i in range(n)]
    d = dom.one()
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return _back(A.domain, dom.zero())
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = norm(-d)
        piv = rows[c][c]
        d = norm(d * piv)
        inv = dom.inv(piv)
        for i in range(c + 1, n):
            if rows[i][c]:
                f = norm(rows[i][c] * inv)
                rows[i] = [norm(a - f * b) for a, b in zip(rows[i], rows[c])]
    return _back(A.domain, d)


def _back(orig: Domain, value: Any) -> Any:
    if orig == INT:
        return int(Fraction(value))
    return value


def as_domain(A: Matrix, domain: Domain) -> Matrix:
    """Re-tag A's entries into ``domain`` (values must be representable there)."""
    if domain == CF64:
        return Matrix(CF64, A.rows, A.cols, tuple(complex(v) for v in A.entries))
    return Matrix.from_flat(A.rows, A.cols, A.entries, domain)
