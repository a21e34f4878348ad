"""Finite semigroups given by Cayley tables, relations on them, and order checks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .matrix import Matrix, ProductKind, product
from .scalar import mod

MAX_ELEMENTS = 10_000
# full triple sweep up to this size; Light's generator test above it
_FULL_ASSOC_LIMIT = 512


class NotAssociativeError(ValueError):
    def __init__(self, triple):
        self.triple = triple
        i, j, k = triple
        super().__init__(f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class OrderAxiomError(ValueError):
    """Raised when a relation that must be a partial order is not one."""

    def __init__(self, report: "CheckReport"):
        self.report = report
        super().__init__(f"relation is not a partial order: {report.summary()}")


class FiniteSemigroup:
    """A Cayley table ``table[i, j] = i*j`` on elements ``0..size-1``.

    ``realization`` optionally lists the matrices the elements stand for,
    together with the product used to build the table.
    """

    def __init__(self, table, labels: Optional[Sequence[str]] = None,
                 realization: Optional[tuple[Sequence[Matrix], ProductKind]] = None,
                 verify: bool = True):
        T = np.array(table, dtype=np.int64)
        if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
            raise ValueError("Cayley table must be a non-empty square array")
        n = T.shape[0]
        if T.min() < 0 or T.max() >= n:
            raise ValueError(f"table entries must lie in [0, {n})")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
        if realization is not None:
            mats, kind = realization
            mats = tuple(mats)
            if len(mats) != n:
                raise ValueError(f"realization has {len(mats)} matrices for {n} elements")
            realization = (mats, kind)
        T.setflags(write=False)
        self.table = T
        self.labels = labels
        self.realization = realization
        if verify:
            bad = associativity_violation(T)
            if bad is not None:
                raise NotAssociativeError(bad)

    @classmethod
    def from_matrices(cls, mats: Sequence[Matrix], kind: ProductKind,
                      labels: Optional[Sequence[str]] = None) -> "FiniteSemigroup":
        """Cayley table of a product-closed set of matrices."""
        mats = list(mats)
        index = {M: i for i, M in enumerate(mats)}
        if len(index) != len(mats):
            raise ValueError("duplicate matrices in realization")
        n = len(mats)
        T = np.empty((n, n), dtype=np.int64)
        for i, A in enumerate(mats):
            for j, B in enumerate(mats):
                P = product(A, B, kind)
                if P not in index:
                    raise ValueError(f"set is not closed: element {i} * element {j} is outside it")
                T[i, j] = index[P]
        return cls(T, labels=labels, realization=(mats, kind))

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def check_index(self, i: int) -> int:
        if not (isinstance(i, (int, np.integer)) and 0 <= i < self.size):
            raise IndexError(f"element index {i!r} out of range [0, {self.size})")
        return int(i)

    def identity(self) -> Optional[int]:
        T = self.table
        idx = np.arange(self.size)
        hits = np.nonzero((T == idx[None, :]).all(axis=1) & (T.T == idx[None, :]).all(axis=1))[0]
        return int(hits[0]) if hits.size else None

    def zero(self) -> Optional[int]:
        T = self.table
        for z in range(self.size):
            if (T[z, :] == z).all() and (T[:, z] == z).all():
                return z
        return None

    def is_commutative(self) -> bool:
        return bool((self.table == self.table.T).all())

    def idempotents(self) -> list[int]:
        return [i for i in range(self.size) if self.table[i, i] == i]

    def with_identity(self) -> tuple[np.ndarray, int]:
        """Table of S^1 (identity adjoined only if S has none) and the identity index."""
        e = self.identity()
        if e is not None:
            return self.table, e
        n = self.size
        T1 = np.empty((n + 1, n + 1), dtype=np.int64)
        T1[:n, :n] = self.table
        T1[n, :] = np.arange(n + 1)
        T1[:, n] = np.arange(n + 1)
        return T1, n

    def __repr__(self):
        return f"FiniteSemigroup(size={self.size})"


def associativity_violation(T: np.ndarray) -> Optional[tuple[int, int, int]]:
    if T.shape[0] <= _FULL_ASSOC_LIMIT:
        i, j, k = kernels.assoc_violation(T)
    else:
        i, j, k = _light_assoc_violation(T)
    return None if i < 0 else (int(i), int(j), int(k))


def _generating_set(T: np.ndarray) -> list[int]:
    n = T.shape[0]
    inside = np.zeros(n, dtype=bool)
    members: list[int] = []
    gens: list[int] = []
    for g in range(n):
        if inside[g]:
            continue
        gens.append(g)
        queue = [g]
        inside[g] = True
        while queue:
            x = queue.pop()
            members.append(x)
            arr = np.array(members)
            fresh = np.unique(np.concatenate([T[x, arr], T[arr, x]]))
            fresh = fresh[~inside[fresh]]
            inside[fresh] = True
            queue.extend(int(v) for v in fresh)
    return gens


def _light_assoc_violation(T: np.ndarray):
    # associativity through every generator of S implies it everywhere
    for g in _generating_set(T):
        bad = T[T[:, g], :] != T[:, T[g, :]]
        if bad.any():
            x, y = np.unravel_index(np.argmax(bad), bad.shape)
            return int(x), int(g), int(y)
    return -1, -1, -1


# ---------------------------------------------------------------------------
# constructors


def _encode_powers(m: int, k: int) -> np.ndarray:
    return m ** np.arange(k - 1, -1, -1, dtype=np.int64)


def matrix_semigroup(n: int, m: int, kind: ProductKind = ProductKind.CONVENTIONAL) -> FiniteSemigroup:
    """All of M_n(Z_m) under the conventional or Hadamard product."""
    if kind is ProductKind.KRONECKER:
        raise ValueError("Kronecker product does not preserve size; no finite table")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    size = m ** (n * n)
    if size > MAX_ELEMENTS:
        raise ValueError(f"M_{n}(Z_{m}) has {size} elements, above the limit {MAX_ELEMENTS}")
    X = kernels.candidate_block(0, size, m, n)
    pw = _encode_powers(m, n * n)
    T = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        if kind is ProductKind.CONVENTIONAL:
            P = (X[i] @ X) % m
        else:
            P = (X[i] * X) % m
        T[i] = P.reshape(size, n * n) @ pw
    dom = mod(m)
    mats = [Matrix(dom, n, n, tuple(int(v) for v in x.ravel())) for x in X]
    labels = ["[" + ";".join(" ".join(str(int(v)) for v in row) for row in x) + "]" for x in X]
    return FiniteSemigroup(T, labels=labels, realization=(mats, kind))


def full_transformation_semigroup(n: int) -> FiniteSemigroup:
    """All maps {0..n-1} -> {0..n-1}; ``f*g`` applies f first, then g."""
    if n < 1:
        raise ValueError("n must be positive")
    size = n ** n
    if size > MAX_ELEMENTS:
        raise ValueError(f"T_{n} has {size} elements, above the limit {MAX_ELEMENTS}")
    maps = np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int64)
    pw = _encode_powers(n, n)
    # (f*g)(x) = g(f(x))
    T = np.stack([maps[:, f] @ pw for f in maps])
    labels = ["".join(str(v + 1) for v in f) for f in maps]
    return FiniteSemigroup(T, labels=labels)


def null_semigroup(k: int) -> FiniteSemigroup:
    """k elements, every product equal to element 0."""
    return FiniteSemigroup(np.zeros((k, k), dtype=np.int64), labels=["0"] + [f"a{i}" for i in range(1, k)])


def left_zero_semigroup(k: int) -> FiniteSemigroup:
    """xy = x."""
    return FiniteSemigroup(np.repeat(np.arange(k)[:, None], k, axis=1))


def right_zero_semigroup(k: int) -> FiniteSemigroup:
    """xy = y."""
    return FiniteSemigroup(np.repeat(np.arange(k)[None, :], k, axis=0))


def cyclic_group(k: int) -> FiniteSemigroup:
    idx = np.arange(k)
    return FiniteSemigroup((idx[:, None] + idx[None, :]) % k)


def subsemigroup_closure(S: FiniteSemigroup, gens: Iterable[int]) -> list[int]:
    T = S.table
    inside = set(int(g) for g in gens)
    frontier = list(inside)
    while frontier:
        new = []
        members = list(inside)
        for x in frontier:
            for y in members:
                for p in (int(T[x, y]), int(T[y, x])):
                    if p not in inside:
                        inside.add(p)
                        new.append(p)
                        members.append(p)
        frontier = new
    return sorted(inside)


def induced_subsemigroup(S: FiniteSemigroup, elements: Sequence[int]) -> FiniteSemigroup:
    elements = list(elements)
    pos = {e: i for i, e in enumerate(elements)}
    try:
        T = np.array([[pos[int(S.table[a, b])] for b in elements] for a in elements], dtype=np.int64)
    except KeyError:
        raise ValueError("element set is not closed under the product") from None
    labels = [S.label(e) for e in elements]
    realization = None
    if S.realization is not None:
        mats, kind = S.realization
        realization = ([mats[e] for e in elements], kind)
    return FiniteSemigroup(T, labels=labels, realization=realization)


def random_small_semigroup(rng: np.random.Generator, max_size: int = 6) -> FiniteSemigroup:
    """A random subsemigroup of size <= max_size of T_3, M_2(Z_2) or a null/zero fixture."""
    pool = [full_transformation_semigroup(3), matrix_semigroup(2, 2),
            matrix_semigroup(2, 2, ProductKind.HADAMARD), full_transformation_semigroup(2)]
    while True:
        pick = int(rng.integers(len(pool) + 2))
        if pick >= len(pool):
            k = int(rng.integers(2, max_size + 1))
            return null_semigroup(k) if pick == len(pool) else left_zero_semigroup(k)
        host = pool[pick]
        k = int(rng.integers(1, 4))
        gens = rng.choice(host.size, size=k, replace=False)
        elems = subsemigroup_closure(host, gens)
        if len(elems) <= max_size:
            perm = rng.permutation(len(elems))
            return induced_subsemigroup(host, [elems[p] for p in perm])


def parse_generator_spec(spec: str) -> FiniteSemigroup:
    """``mat:n:m:conv|had``, ``tfull:n``, ``null:k``, ``lz:k``, ``rz:k``, ``cyclic:k``."""
    parts = spec.split(":")
    try:
        head, args = parts[0], [p for p in parts[1:]]
        if head == "mat" and len(args) == 3:
            kind = {"conv": ProductKind.CONVENTIONAL, "had": ProductKind.HADAMARD}.get(args[2])
            if kind is None:
                raise ValueError(f"product must be conv or had, got {args[2]!r}")
            return matrix_semigroup(int(args[0]), int(args[1]), kind)
        if len(args) == 1:
            k = int(args[0])
            builders = {"tfull": full_transformation_semigroup, "null": null_semigroup,
                        "lz": left_zero_semigroup, "rz": right_zero_semigroup, "cyclic": cyclic_group}
            if head in builders:
                if k < 1:
                    raise ValueError("size must be positive")
                return builders[head](k)
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown generator spec {spec!r}")


def s_invariant(S: FiniteSemigroup, s: int) -> FiniteSemigroup:
    """Same carrier with the product x.y = x s y."""
    s = S.check_index(s)
    return FiniteSemigroup(kernels.s_invariant_table(S.table, s), labels=S.labels)


# ---------------------------------------------------------------------------
# regularity and weak separativity


def regular_elements(S: FiniteSemigroup) -> np.ndarray:
    return kernels.regular_elements(S.table)


def is_regular_semigroup(S: FiniteSemigroup) -> bool:
    return bool(regular_elements(S).all())


def is_weakly_separative(S: FiniteSemigroup) -> tuple[bool, Optional[tuple[int, int]]]:
    a, b = kernels.weak_sep_violation(S.table)
    if a < 0:
        return True, None
    return False, (int(a), int(b))


# ---------------------------------------------------------------------------
# relations


@dataclass(frozen=True, eq=False)
class Relation:
    """Boolean adjacency ``adj[i, j]`` meaning ``i <= j`` on the elements of ``over``."""

    over: FiniteSemigroup
    adj: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.array(self.adj, dtype=bool)
        if a.shape != (self.over.size, self.over.size):
            raise ValueError(f"relation shape {a.shape} does not match semigroup size {self.over.size}")
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @classmethod
    def from_pairs(cls, S: FiniteSemigroup, pairs: Iterable[tuple[int, int]]) -> "Relation":
        a = np.zeros((S.size, S.size), dtype=bool)
        for i, j in pairs:
            a[S.check_index(i), S.check_index(j)] = True
        return cls(S, a)

    @classmethod
    def identity(cls, S: FiniteSemigroup) -> "Relation":
        return cls(S, np.eye(S.size, dtype=bool))

    @classmethod
    def full(cls, S: FiniteSemigroup) -> "Relation":
        return cls(S, np.ones((S.size, S.size), dtype=bool))

    @property
    def pairs(self) -> frozenset:
        return frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(self.adj)))

    def __contains__(self, pair):
        i, j = pair
        return bool(self.adj[i, j])

    def __len__(self):
        return int(self.adj.sum())

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.adj.shape == other.adj.shape and bool((self.adj == other.adj).all())

    def __le__(self, other: "Relation") -> bool:
        return bool((~self.adj | other.adj).all())

    def __hash__(self):
        return hash(self.adj.tobytes())


def conrad_relation(S: FiniteSemigroup) -> Relation:
    """a rho b iff asa = asb = bsa for all s in S, read off the Cayley table."""
    return Relation(S, kernels.conrad_relation(S.table))


def reflexive_transitive_closure(S: FiniteSemigroup, edges: Iterable[tuple[int, int]]) -> Relation:
    n = S.size
    a = np.eye(n, dtype=bool)
    for i, j in edges:
        a[i, j] = True
    # Warshall
    for k in range(n):
        a |= a[:, k:k + 1] & a[k:k + 1, :]
    return Relation(S, a)


# ---------------------------------------------------------------------------
# axiom reports


@dataclass(frozen=True)
class AxiomVerdict:
    ok: bool
    witness: Optional[tuple[int, ...]] = None

    def to_dict(self):
        return {"verdict": self.ok, "witness": list(self.witness) if self.witness is not None else None}


@dataclass(frozen=True)
class CheckReport:
    reflexive: AxiomVerdict
    antisymmetric: AxiomVerdict
    transitive: AxiomVerdict
    compatible: AxiomVerdict

    AXIOMS = ("reflexive", "antisymmetric", "transitive", "compatible")

    @property
    def partial_order(self) -> bool:
        return self.reflexive.ok and self.antisymmetric.ok and self.transitive.ok

    @property
    def all_pass(self) -> bool:
        return self.partial_order and self.compatible.ok

    def items(self):
        return [(name, getattr(self, name)) for name in self.AXIOMS]

    def summary(self) -> str:
        return ", ".join(f"{name}={'PASS' if v.ok else 'FAIL'}" for name, v in self.items())

    def to_dict(self):
        return {name: v.to_dict() for name, v in self.items()}

    def validate(self, S: FiniteSemigroup, R: Relation) -> bool:
        """Re-check every witness against the relation."""
        T, a = S.table, R.adj
        checks = {
            "reflexive": lambda w: not a[w[0], w[0]],
            "antisymmetric": lambda w: w[0] != w[1] and a[w[0], w[1]] and a[w[1], w[0]],
            "transitive": lambda w: a[w[0], w[1]] and a[w[1], w[2]] and not a[w[0], w[2]],
            "compatible": lambda w: a[w[0], w[1]] and not (
                a[T[w[0], w[2]], T[w[1], w[2]]] and a[T[w[2], w[0]], T[w[2], w[1]]]),
        }
        for name, v in self.items():
            if not v.ok and (v.witness is None or not checks[name](v.witness)):
                return False
        return True


def _verdict(raw) -> AxiomVerdict:
    raw = raw if isinstance(raw, tuple) else (raw,)
    if raw[0] < 0:
        return AxiomVerdict(True)
    return AxiomVerdict(False, tuple(int(v) for v in raw))


def check_order(S: FiniteSemigroup, R: Relation) -> CheckReport:
    """All four axioms, each evaluated independently with a minimal witness."""
    if R.over is not S and R.adj.shape[0] != S.size:
        raise ValueError("relation is over a different semigroup")
    a = np.ascontiguousarray(R.adj)
    return CheckReport(
        reflexive=_verdict(kernels.reflexive_violation(a)),
        antisymmetric=_verdict(kernels.antisymmetric_violation(a)),
        transitive=_verdict(kernels.transitive_violation(a)),
        compatible=_verdict(kernels.compatible_violation(S.table, a)),
    )


def largest_compatible_order(S: FiniteSemigroup, P: Relation) -> Relation:
    """{(x, y) : (axb, ayb) in P for all a, b in S^1}."""
    report = check_order(S, P)
    if not report.partial_order:
        raise OrderAxiomError(report)
    T1, _ = S.with_identity()
    return Relation(S, kernels.largest_compatible(T1, np.ascontiguousarray(P.adj)))


def hasse_edges(S: FiniteSemigroup, R: Relation) -> list[tuple[int, int]]:
    """Covering pairs of the partial order R, sorted."""
    report = check_order(S, R)
    if not report.partial_order:
        raise OrderAxiomError(report)
    strict = R.adj.copy()
    np.fill_diagonal(strict, False)
    s = strict.astype(np.int64)
    through = (s @ s) > 0
    cover = strict & ~through
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(cover))]


def random_partial_order(S: FiniteSemigroup, rng: np.random.Generator, density: float = 0.4) -> Relation:
    n = S.size
    perm = rng.permutation(n)
    edges = [(int(perm[i]), int(perm[j])) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return reflexive_transitive_closure(S, edges)


def materialize_order(S: FiniteSemigroup, kind, ctx=None) -> Relation:
    """The finite relation {(i, j) : element i <= element j} for an order kind.

    Identity needs nothing. Conrad on a semigroup without a matrix realization
    is read off the Cayley table; every other case evaluates the matrix
    predicate on the realizing matrices.
    """
    from .matrix import DEFAULT_CTX
    from .orders import IDENTITY, leq

    ctx = DEFAULT_CTX if ctx is None else ctx
    if kind == IDENTITY:
        return Relation.identity(S)
    if S.realization is None:
        if kind.name == "conrad":
            return conrad_relation(S)
        raise ValueError(f"order {kind} needs a matrix realization of the semigroup")
    mats, _ = S.realization
    n = S.size
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            adj[i, j] = leq(mats[i], mats[j], kind, ctx)
    return Relation(S, adj)
