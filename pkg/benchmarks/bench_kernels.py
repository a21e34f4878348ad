"""Time the numba kernels against the vectorised numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Both backends are imported in the same process (``kernels.JIT`` and
``kernels.NUMPY``); results are checked for equality before timing.
"""

import argparse
import json
import time

import numpy as np

from matorder import kernels
from matorder._accel import HAS_NUMBA
from matorder.semigroup import full_transformation_semigroup, matrix_semigroup


def cases():
    m2z3 = matrix_semigroup(2, 3).table
    t3 = full_transformation_semigroup(3).table
    m2z5 = matrix_semigroup(2, 5).table
    t4 = full_transformation_semigroup(4).table
    rng = np.random.default_rng(0)
    R = rng.random((t4.shape[0],) * 2) < 0.05
    np.fill_diagonal(R, True)
    A = np.array([[1, 2], [0, 1]], dtype=np.int64)
    return [
        ("assoc_violation", "M2(Z3) 81", (m2z3,)),
        ("assoc_violation", "T4 256", (t4,)),
        ("regular_elements", "M2(Z5) 625", (m2z5,)),
        ("weak_sep_violation", "T3 27", (t3,)),
        ("weak_sep_violation", "M2(Z5) 625", (m2z5,)),
        ("conrad_relation", "M2(Z3) 81", (m2z3,)),
        ("conrad_relation", "T4 256", (t4,)),
        ("transitive_violation", "random 256", (R,)),
        ("compatible_violation", "T4 256", (t4, R)),
        ("conrad_oracle", "M2(Z7) pair", (A, A, 7, False)),
        ("inverse_search", "M2(Z7)", (A, 7, True, True)),
    ]


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json")
    args = ap.parse_args()
    if not HAS_NUMBA:
        print("numba unavailable (or MATORDER_JIT=0): only the numpy column is meaningful")
    rows = []
    print(f"{'kernel':22s} {'input':12s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for name, label, a in cases():
        jit, vec = kernels.JIT[name], kernels.NUMPY[name]
        r1, r2 = jit(*a), vec(*a)  # warm-up compiles the jit path
        assert np.array_equal(np.asarray(r1), np.asarray(r2)), name
        tj, tn = best_of(jit, a, args.repeat), best_of(vec, a, args.repeat)
        rows.append({"kernel": name, "input": label, "numba_s": tj, "numpy_s": tn})
        print(f"{name:22s} {label:12s} {tj:10.5f} {tn:10.5f} {tn / tj:8.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
