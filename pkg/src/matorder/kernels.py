"""Integer kernels over Cayley tables and small modular matrix spaces.

Each kernel has two implementations with identical results:

* ``loop_*``  -- explicit loops, compiled with numba when available;
* ``np_*``    -- vectorised numpy, used when ``MATORDER_JIT=0``.

The public names (``assoc_violation`` etc.) dispatch on
:data:`matorder._accel.BACKEND`. Witnesses are always the lexicographically
smallest index tuple, so both backends agree exactly.

Tables are ``int64`` arrays with ``T[i, j] = i*j``; relations are ``bool``
adjacency matrices with ``R[i, j]`` meaning ``i <= j``.
"""

import numpy as np

from ._accel import BACKEND, HAS_NUMBA, njit

_CHUNK = 1 << 16


# ---------------------------------------------------------------------------
# associativity


def loop_assoc_violation(T):
    n = T.shape[0]
    for i in range(n):
        for j in range(n):
            ij = T[i, j]
            for k in range(n):
                if T[ij, k] != T[i, T[j, k]]:
                    return i, j, k
    return -1, -1, -1


def np_assoc_violation(T):
    n = T.shape[0]
    for i in range(n):
        left = T[T[i, :], :]
        right = T[i, T]
        bad = left != right
        if bad.any():
            j, k = np.unravel_index(np.argmax(bad), bad.shape)
            return int(i), int(j), int(k)
    return -1, -1, -1


# ---------------------------------------------------------------------------
# regularity and weak separativity


def loop_regular_elements(T):
    n = T.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        for x in range(n):
            if T[T[a, x], a] == a:
                out[a] = True
                break
    return out


def np_regular_elements(T):
    n = T.shape[0]
    a = np.arange(n)
    return (T[T, a[:, None]] == a[:, None]).any(axis=1)


def loop_weak_sep_violation(T):
    n = T.shape[0]
    for a in range(n):
        for b in range(a + 1, n):
            same = True
            for s in range(n):
                as_ = T[a, s]
                bs = T[b, s]
                v = T[as_, a]
                if T[as_, b] != v or T[bs, a] != v or T[bs, b] != v:
                    same = False
                    break
            if same:
                return a, b
    return -1, -1


def np_weak_sep_violation(T):
    n = T.shape[0]
    idx = np.arange(n)
    for a in range(n):
        # M[s, x] = (a s) x
        M = T[T[a, :], :]
        asa = M[:, a]
        asb = M[:, idx]
        bsa = T[T[idx, :], a]
        bsb = T[T[idx, :], idx[:, None]]
        ok = (asb == asa[:, None]).all(axis=0)
        ok &= (bsa == asa[None, :]).all(axis=1)
        ok &= (bsb == asa[None, :]).all(axis=1)
        ok[: a + 1] = False
        if ok.any():
            return int(a), int(np.argmax(ok))
    return -1, -1


# ---------------------------------------------------------------------------
# Conrad relation:  a rho b  iff  asa = asb = bsa  for every s


def loop_conrad_relation(T):
    n = T.shape[0]
    R = np.zeros((n, n), dtype=np.bool_)
    for a in range(n):
        for b in range(n):
            ok = True
            for s in range(n):
                as_ = T[a, s]
                v = T[as_, a]
                if T[as_, b] != v or T[T[b, s], a] != v:
                    ok = False
                    break
            R[a, b] = ok
    return R


def np_conrad_relation(T):
    n = T.shape[0]
    R = np.zeros((n, n), dtype=np.bool_)
    for a in range(n):
        M = T[T[a, :], :]
        asa = M[:, a]
        cand = np.nonzero((M == asa[:, None]).all(axis=0))[0]
        # bsa = asa only needs checking where asb = asa already holds
        R[a, cand] = (T[T[cand, :], a] == asa[None, :]).all(axis=1)
    return R


# ---------------------------------------------------------------------------
# order axioms


def loop_reflexive_violation(R):
    for i in range(R.shape[0]):
        if not R[i, i]:
            return i
    return -1


def np_reflexive_violation(R):
    bad = ~np.diagonal(R)
    return int(np.argmax(bad)) if bad.any() else -1


def loop_antisymmetric_violation(R):
    n = R.shape[0]
    for i in range(n):
        for j in range(n):
            if i != j and R[i, j] and R[j, i]:
                return i, j
    return -1, -1


def np_antisymmetric_violation(R):
    bad = R & R.T
    np.fill_diagonal(bad, False)
    if bad.any():
        i, j = np.unravel_index(np.argmax(bad), bad.shape)
        return int(i), int(j)
    return -1, -1


def loop_transitive_violation(R):
    n = R.shape[0]
    for i in range(n):
        for j in range(n):
            if R[i, j]:
                for k in range(n):
                    if R[j, k] and not R[i, k]:
                        return i, j, k
    return -1, -1, -1


def np_transitive_violation(R):
    n = R.shape[0]
    for i in range(n):
        bad = R[i, :, None] & R & ~R[i, None, :]
        if bad.any():
            j, k = np.unravel_index(np.argmax(bad), bad.shape)
            return int(i), int(j), int(k)
    return -1, -1, -1


def loop_compatible_violation(T, R):
    """First (x, y, z) with x<=y but not (xz <= yz and zx <= zy)."""
    n = T.shape[0]
    for x in range(n):
        for y in range(n):
            if R[x, y]:
                for z in range(n):
                    if not R[T[x, z], T[y, z]] or not R[T[z, x], T[z, y]]:
                        return x, y, z
    return -1, -1, -1


def np_compatible_violation(T, R):
    xs, ys = np.nonzero(R)
    for start in range(0, xs.size, 4096):
        x = xs[start:start + 4096]
        y = ys[start:start + 4096]
        ok = R[T[x, :], T[y, :]] & R[T[:, x].T, T[:, y].T]
        bad = ~ok
        if bad.any():
            p, z = np.unravel_index(np.argmax(bad), bad.shape)
            return int(x[p]), int(y[p]), int(z)
    return -1, -1, -1


# ---------------------------------------------------------------------------
# largest compatible order inside P (table already has an identity)


def loop_largest_compatible(T1, P):
    n1 = T1.shape[0]
    n = P.shape[0]
    out = np.zeros((n, n), dtype=np.bool_)
    for x in range(n):
        for y in range(n):
            if not P[x, y]:
                continue
            ok = True
            for a in range(n1):
                ax = T1[a, x]
                ay = T1[a, y]
                for b in range(n1):
                    if not P[T1[ax, b], T1[ay, b]]:
                        ok = False
                        break
                if not ok:
                    break
            out[x, y] = ok
    return out


def np_largest_compatible(T1, P):
    n = P.shape[0]
    out = np.zeros((n, n), dtype=np.bool_)
    xs, ys = np.nonzero(P)
    for x, y in zip(xs, ys):
        axb = T1[T1[:, x], :]
        ayb = T1[T1[:, y], :]
        out[x, y] = bool(P[axb, ayb].all())
    return out


# ---------------------------------------------------------------------------
# s-invariant


def loop_s_invariant_table(T, s):
    n = T.shape[0]
    out = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        i_s = T[i, s]
        for j in range(n):
            out[i, j] = T[i_s, j]
    return out


def np_s_invariant_table(T, s):
    return T[T[:, s], :].astype(np.int64)


# ---------------------------------------------------------------------------
# modular matrix search spaces; candidate t <-> digits of t base m,
# most significant digit first, so index order is lexicographic entry order


def _decode(t, m, n, X):
    for p in range(n * n - 1, -1, -1):
        X[p // n, p % n] = t % m
        t //= m


def _mm(A, B, m, out):
    n = A.shape[0]
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc += A[i, k] * B[k, j]
            out[i, j] = acc % m


def loop_conrad_oracle(A, B, m, hadamard):
    n = A.shape[0]
    total = m ** (n * n)
    S = np.empty((n, n), dtype=np.int64)
    tmp = np.empty((n, n), dtype=np.int64)
    asa = np.empty((n, n), dtype=np.int64)
    asb = np.empty((n, n), dtype=np.int64)
    bsa = np.empty((n, n), dtype=np.int64)
    for t in range(total):
        _decode(t, m, n, S)
        if hadamard:
            for i in range(n):
                for j in range(n):
                    asa[i, j] = (A[i, j] * S[i, j] * A[i, j]) % m
                    asb[i, j] = (A[i, j] * S[i, j] * B[i, j]) % m
                    bsa[i, j] = (B[i, j] * S[i, j] * A[i, j]) % m
        else:
            _mm(A, S, m, tmp)
            _mm(tmp, A, m, asa)
            _mm(tmp, B, m, asb)
            _mm(B, S, m, tmp)
            _mm(tmp, A, m, bsa)
        for i in range(n):
            for j in range(n):
                if asa[i, j] != asb[i, j] or asa[i, j] != bsa[i, j]:
                    return False
    return True


def loop_inverse_search(A, m, want_inner, want_outer):
    n = A.shape[0]
    total = m ** (n * n)
    X = np.empty((n, n), dtype=np.int64)
    tmp = np.empty((n, n), dtype=np.int64)
    res = np.empty((n, n), dtype=np.int64)
    hits = np.zeros(total, dtype=np.bool_)
    for t in range(total):
        _decode(t, m, n, X)
        ok = True
        if want_inner:
            _mm(A, X, m, tmp)
            _mm(tmp, A, m, res)
            for i in range(n):
                for j in range(n):
                    if res[i, j] != A[i, j]:
                        ok = False
        if ok and want_outer:
            _mm(X, A, m, tmp)
            _mm(tmp, X, m, res)
            for i in range(n):
                for j in range(n):
                    if res[i, j] != X[i, j]:
                        ok = False
        hits[t] = ok
    return np.nonzero(hits)[0]


def candidate_block(start, stop, m, n):
    """All matrices with lexicographic index in [start, stop) as a (k, n, n) array."""
    t = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((t.size, n * n), dtype=np.int64)
    for p in range(n * n - 1, -1, -1):
        digits[:, p] = t % m
        t = t // m
    return digits.reshape(-1, n, n)


def np_conrad_oracle(A, B, m, hadamard):
    n = A.shape[0]
    total = m ** (n * n)
    for start in range(0, total, _CHUNK):
        S = candidate_block(start, min(total, start + _CHUNK), m, n)
        if hadamard:
            asa = (A * S * A) % m
            asb = (A * S * B) % m
            bsa = (B * S * A) % m
        else:
            AS = (A @ S) % m
            asa = (AS @ A) % m
            asb = (AS @ B) % m
            bsa = (((B @ S) % m) @ A) % m
        if not ((asa == asb).all() and (asa == bsa).all()):
            return False
    return True


def np_inverse_search(A, m, want_inner, want_outer):
    n = A.shape[0]
    total = m ** (n * n)
    found = []
    for start in range(0, total, _CHUNK):
        X = candidate_block(start, min(total, start + _CHUNK), m, n)
        ok = np.ones(X.shape[0], dtype=bool)
        if want_inner:
            ok &= (((A @ X) % m @ A) % m == A).all(axis=(1, 2))
        if want_outer:
            ok &= (((X @ A) % m @ X) % m == X).all(axis=(1, 2))
        found.append(np.nonzero(ok)[0] + start)
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)


# ---------------------------------------------------------------------------
# dispatch

_NAMES = (
    "assoc_violation", "regular_elements", "weak_sep_violation", "conrad_relation",
    "reflexive_violation", "antisymmetric_violation", "transitive_violation",
    "compatible_violation", "largest_compatible", "s_invariant_table",
    "conrad_oracle", "inverse_search",
)

if HAS_NUMBA:
    _decode = njit(cache=True)(_decode)
    _mm = njit(cache=True)(_mm)
    JIT = {name: njit(cache=True)(globals()["loop_" + name]) for name in _NAMES}
else:
    JIT = {name: globals()["loop_" + name] for name in _NAMES}

NUMPY = {name: globals()["np_" + name] for name in _NAMES}

_ACTIVE = JIT if BACKEND == "numba" else NUMPY

assoc_violation = _ACTIVE["assoc_violation"]
regular_elements = _ACTIVE["regular_elements"]
weak_sep_violation = _ACTIVE["weak_sep_violation"]
conrad_relation = _ACTIVE["conrad_relation"]
reflexive_violation = _ACTIVE["reflexive_violation"]
antisymmetric_violation = _ACTIVE["antisymmetric_violation"]
transitive_violation = _ACTIVE["transitive_violation"]
compatible_violation = _ACTIVE["compatible_violation"]
largest_compatible = _ACTIVE["largest_compatible"]
s_invariant_table = _ACTIVE["s_invariant_table"]
conrad_oracle = _ACTIVE["conrad_oracle"]
inverse_search = _ACTIVE["inverse_search"]
