"""Slow reference computations, deliberately independent of the main code paths."""

from __future__ import annotations

import itertools
from typing import Optional

import numpy as np

from .matrix import Matrix
from .semigroup import FiniteSemigroup, Relation


def greville_pinv(A: Matrix) -> Matrix:
    """Moore-Penrose inverse by Greville's column recursion (exact fields only)."""
    dom = A.domain
    m, n = A.rows, A.cols
    zero = dom.zero()
    conj = dom.conj
    cols = [list(A.col(j)) for j in range(n)]

    def dot(u, v):  # u* v
        return sum((conj(a) * b for a, b in zip(u, v)), zero)

    a1 = cols[0]
    nn = dot(a1, a1)
    # pinv rows: list of n_k rows, each of length m
    P = [[conj(v) / nn for v in a1]] if nn else [[zero] * m]
    for k in range(1, n):
        ak = cols[k]
        d = [sum((P[r][i] * ak[i] for i in range(m)), zero) for r in range(k)]
        Ad = [sum((cols[r][i] * d[r] for r in range(k)), zero) for i in range(m)]
        c = [ak[i] - Ad[i] for i in range(m)]
        cc = dot(c, c)
        if cc:
            b = [conj(v) / cc for v in c]
        else:
            s = 1 + dot(d, d)
            dP = [sum((conj(d[r]) * P[r][i] for r in range(k)), zero) for i in range(m)]
            b = [v / s for v in dP]
        P = [[P[r][i] - d[r] * b[i] for i in range(m)] for r in range(k)] + [b]
    return Matrix(dom, n, m, tuple(dom.coerce(v) for row in P for v in row))


def brute_largest_compatible(S: FiniteSemigroup, P: Relation) -> tuple[Optional[Relation], int]:
    """Enumerate every relation between the diagonal and P; return the greatest
    one that is transitive and compatible (None if no greatest exists) and the
    number of such relations found."""
    n = S.size
    T = [[int(v) for v in row] for row in S.table]
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y and P.adj[x, y]]
    index = {p: i for i, p in enumerate(pairs)}
    impossible = 0
    need = [0] * len(pairs)
    for i, (x, y) in enumerate(pairs):
        for z in range(n):
            for q in ((T[x][z], T[y][z]), (T[z][x], T[z][y])):
                if q[0] == q[1]:
                    continue
                if q not in index:
                    impossible |= 1 << i
                else:
                    need[i] |= 1 << index[q]
    comps = []
    for i, (x, y) in enumerate(pairs):
        for j, (y2, z) in enumerate(pairs):
            if y2 == y and x != z:
                comps.append((i, j, index.get((x, z))))
    found = []
    for mask in range(1 << len(pairs)):
        if mask & impossible:
            continue
        ok = all(not (mask >> i) & 1 or (need[i] & ~mask) == 0 for i in range(len(pairs)))
        if ok:
            for i, j, r in comps:
                if (mask >> i) & 1 and (mask >> j) & 1 and (r is None or not (mask >> r) & 1):
                    ok = False
                    break
        if ok:
            found.append(mask)
    union = 0
    for mask in found:
        union |= mask
    if union not in found:
        return None, len(found)
    adj = np.eye(n, dtype=bool)
    for i, (x, y) in enumerate(pairs):
        if (union >> i) & 1:
            adj[x, y] = True
    return Relation(S, adj), len(found)


def associative_by_triples(table) -> bool:
    n = len(table)
    return all(table[table[i][j]][k] == table[i][table[j][k]]
               for i, j, k in itertools.product(range(n), repeat=3))
