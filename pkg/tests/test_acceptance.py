"""The twelve acceptance criteria, each at its stated tolerance and time limit.

One PASS/FAIL line per criterion is printed in the pytest terminal summary
(and to stdout when this file is run directly).
"""

import pytest

from matorder.suites import CRITERIA

_cache = {}
ACCEPTANCE_LINES = {}

COMPAT = "compatibility A*<=B, C*<=D => AC *<= BD"


def result(k):
    if k not in _cache:
        r = CRITERIA[k](seed=0)
        _cache[k] = r
        failed = [c for c in r.checks if not c.passed]
        note = "" if not failed else " | failing: " + "; ".join(f"{c.name} ({c.detail})" for c in failed)
        ACCEPTANCE_LINES[k] = (f"criterion {k:2d} {'PASS' if r.passed else 'FAIL'}  {r.name} "
                               f"[{r.seconds:.2f}s < {r.time_limit:g}s]{note}")
    return _cache[k]


def _assert(r, skip=()):
    bad = [f"{c.name}: {c.detail}" for c in r.checks if not c.passed and c.name not in skip]
    assert not bad, bad
    assert r.seconds < r.time_limit, f"{r.seconds:.2f}s over the {r.time_limit}s limit"


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 8, 9, 10, 11, 12])
def test_criterion(k):
    _assert(result(k))


@pytest.mark.parametrize("k", [6, 7])
def test_star_criterion_order_axioms(k):
    _assert(result(k), skip={COMPAT})


@pytest.mark.parametrize("k", [6, 7])
def test_star_criterion_compatibility(k):
    # genuinely false for the star orders: A = diag(1,0) *<= I and C *<= C with C = [[1,0],[1,0]],
    # yet R(AC) is not inside R(C); kept as a live failing check
    check = next(c for c in result(k).checks if c.name == COMPAT)
    assert check.passed, check.detail


def test_null_semigroup_witness_printed():
    r = result(3)
    line = next(c for c in r.checks if c.name.startswith("null2 rho fails"))
    assert line.passed and "witness (0, 1)" in line.detail


if __name__ == "__main__":
    for k in CRITERIA:
        result(k)
        print(ACCEPTANCE_LINES[k])
