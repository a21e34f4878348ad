"""The oracles themselves are checked on hand-sized instances."""

from fractions import Fraction

import numpy as np

from matorder.matrix import Matrix
from matorder.oracles import associative_by_triples, brute_largest_compatible, greville_pinv
from matorder.scalar import GAUSS, RAT, GaussianRational
from matorder.semigroup import (Relation, cyclic_group, left_zero_semigroup, null_semigroup,
                                reflexive_transitive_closure)


def test_greville_hand_cases():
    assert greville_pinv(Matrix.diag([2, 0], RAT)) == Matrix.diag([Fraction(1, 2), 0], RAT)
    assert greville_pinv(Matrix.from_rows([[1], [1]], RAT)) == Matrix.from_rows([[Fraction(1, 2), Fraction(1, 2)]], RAT)
    assert greville_pinv(Matrix.zeros(2, 2, RAT)) == Matrix.zeros(2, 2, RAT)
    i = GaussianRational(0, 1)
    assert greville_pinv(Matrix.from_rows([[i]], GAUSS)) == Matrix.from_rows([[-i]], GAUSS)


def test_greville_zero_first_column():
    A = Matrix.from_rows([[0, 1], [0, 1]], RAT)
    assert greville_pinv(A) == Matrix.from_rows([[0, 0], [Fraction(1, 2), Fraction(1, 2)]], RAT)


def test_brute_compatible_null():
    S = null_semigroup(3)
    P = reflexive_transitive_closure(S, [(1, 2)])
    best, count = brute_largest_compatible(S, P)
    assert best == P and count == 2  # diagonal and P itself


def test_brute_compatible_group():
    S = cyclic_group(3)
    P = reflexive_transitive_closure(S, [(0, 1), (1, 2)])
    best, count = brute_largest_compatible(S, P)
    assert best == Relation.identity(S) and count == 1


def test_brute_compatible_left_zero():
    # xy = x: compatibility only needs x <= y  =>  zx <= zy, i.e. z <= z
    S = left_zero_semigroup(3)
    P = reflexive_transitive_closure(S, [(0, 1), (0, 2)])
    best, count = brute_largest_compatible(S, P)
    assert best == P and count == 4


def test_associative_by_triples():
    assert associative_by_triples([[0, 0], [0, 1]])
    assert not associative_by_triples([[1, 0], [1, 1]])
