"""Reproduction suites: each lemma checked exhaustively or on seeded corpora.

``run_suite(lemma_id)`` runs the named group; ``CRITERIA`` maps the twelve
numbered acceptance checks to their functions. Each function returns a
:class:`SuiteResult` whose ``checks`` list records every sub-claim.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import generators as gen
from .ginv import moore_penrose, penrose_residuals, satisfies_penrose
from .matrix import (DEFAULT_CTX, Matrix, ProductKind, ToleranceContext, conj_transpose, hadamard,
                     mat_mul, max_abs_diff, rank, sub)
from .oracles import brute_largest_compatible, greville_pinv
from .orders import (CONRAD, CONRAD_HADAMARD, conrad_leq, conrad_leq_oracle, entrywise_compat_counterexample,
                     entrywise_leq, left_star_leq, right_star_leq, star_compat_counterexample)
from .psd import (is_hermitian, is_psd, loewner_leq, psd_approx_term, psd_necessary_minors, psd_sqrt)
from .scalar import CF64, GAUSS, INT, RAT, GaussianRational, mod
from .semigroup import (Relation, check_order, conrad_relation, cyclic_group, full_transformation_semigroup,
                        is_regular_semigroup, is_weakly_separative, largest_compatible_order,
                        left_zero_semigroup, materialize_order, matrix_semigroup, null_semigroup,
                        random_partial_order, random_small_semigroup, s_invariant, associativity_violation)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    seconds: float = 0.0
    time_limit: float | None = None

    @property
    def passed(self) -> bool:
        timed_ok = self.time_limit is None or self.seconds < self.time_limit
        return timed_ok and all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            out.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f" -- {c.detail}" if c.detail else ""))
        if self.time_limit is not None:
            ok = self.seconds < self.time_limit
            out.append(f"  [{'PASS' if ok else 'FAIL'}] runtime {self.seconds:.2f}s < {self.time_limit:g}s")
        return out

    def to_dict(self):
        return {
            "name": self.name, "verdict": self.passed, "seconds": round(self.seconds, 3),
            "time_limit": self.time_limit, "counts": self.counts,
            "checks": [{"name": c.name, "verdict": c.passed, "detail": c.detail} for c in self.checks],
        }


def _timed(name: str, limit: float):
    def deco(fn: Callable[..., SuiteResult]):
        def run(seed: int = 0, ctx: ToleranceContext = DEFAULT_CTX) -> SuiteResult:
            res = SuiteResult(name, time_limit=limit)
            t0 = time.perf_counter()
            fn(res, seed, ctx)
            res.seconds = time.perf_counter() - t0
            return res
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return deco


def _fmt(M: Matrix) -> str:
    return "[" + "; ".join(" ".join(M.domain.format(v) for v in M.row(i)) for i in range(M.rows)) + "]"


# ---------------------------------------------------------------------------
# 1-3: Conrad order


@_timed("conrad oracle equivalence", 5.0)
def conrad_oracle_equivalence(res: SuiteResult, seed: int, ctx: ToleranceContext):
    S2 = matrix_semigroup(2, 2)
    mats = S2.realization[0]
    for prod in (ProductKind.CONVENTIONAL, ProductKind.HADAMARD):
        disagree = [(i, j) for i, A in enumerate(mats) for j, B in enumerate(mats)
                    if conrad_leq(A, B, prod) != conrad_leq_oracle(A, B, prod)]
        res.add(f"M2(Z2) all 256 pairs, {prod.value}", not disagree,
                f"{len(disagree)} disagreements" + (f", first {disagree[0]}" if disagree else ""))
    rng = np.random.default_rng(seed)
    for prod in (ProductKind.CONVENTIONAL, ProductKind.HADAMARD):
        S5 = matrix_semigroup(2, 5, prod)
        mats5 = S5.realization[0]
        # half uniform, half drawn from the table-derived relation so both verdicts occur
        related = np.argwhere(conrad_relation(S5).adj)
        pairs = [tuple(rng.integers(0, S5.size, 2)) for _ in range(250)]
        pairs += [tuple(related[k]) for k in rng.integers(0, len(related), 250)]
        trues = 0
        bad = 0
        for i, j in pairs:
            A, B = mats5[i], mats5[j]
            fast = conrad_leq(A, B, prod)
            trues += fast
            bad += fast != conrad_leq_oracle(A, B, prod)
        res.add(f"M2(Z5) {len(pairs)} seeded pairs, {prod.value}", bad == 0,
                f"{bad} disagreements, {trues} related pairs")
        res.counts[f"z5_{prod.value}_pairs"] = len(pairs)


@_timed("Conrad ordered-semigroup lemma on M2(Z2)", 10.0)
def conrad_ordered_semigroup(res: SuiteResult, seed: int, ctx: ToleranceContext):
    S = matrix_semigroup(2, 2)
    R = materialize_order(S, CONRAD, ctx)
    rep = check_order(S, R)
    for name, v in rep.items():
        res.add(name, v.ok, f"witness {v.witness}" if not v.ok else "")
    res.add("witnesses re-validate", rep.validate(S, R))
    T = S.table
    pairs = list(R.pairs)
    bad = [(p, q) for p in pairs for q in pairs if (int(T[p[0], q[0]]), int(T[p[1], q[1]])) not in R]
    res.add("A rho B and C rho D imply AC rho BD", not bad, f"{len(pairs)}^2 hypothesis pairs")
    res.counts.update(pairs=len(R), triples=S.size ** 3)


def _conrad_corpus():
    return [
        ("M2(Z2)", matrix_semigroup(2, 2)),
        ("M2(Z3)", matrix_semigroup(2, 3)),
        ("T3", full_transformation_semigroup(3)),
        ("T2", full_transformation_semigroup(2)),
        ("M2(Z2) hadamard", matrix_semigroup(2, 2, ProductKind.HADAMARD)),
        ("null2", null_semigroup(2)),
        ("null3", null_semigroup(3)),
        ("left-zero3", left_zero_semigroup(3)),
        ("Z4", cyclic_group(4)),
    ]


@_timed("Burgess-Raphael: rho is a partial order iff weakly separative", 10.0)
def burgess_raphael(res: SuiteResult, seed: int, ctx: ToleranceContext):
    for name, S in _conrad_corpus():
        ws, wit = is_weakly_separative(S)
        kind = CONRAD_HADAMARD if "hadamard" in name else CONRAD
        R = materialize_order(S, kind, ctx) if S.realization else conrad_relation(S)
        rep = check_order(S, R)
        detail = f"weakly separative={ws}, partial order={rep.partial_order}"
        if not rep.antisymmetric.ok:
            detail += f", antisymmetry witness {rep.antisymmetric.witness}"
        res.add(name, rep.partial_order == ws, detail)
        if name in ("M2(Z2)", "M2(Z3)", "T3"):
            res.add(f"{name} weakly separative and rho a partial order", ws and rep.partial_order)
        if name == "null2":
            res.add("null2 rho fails antisymmetry with witness", (not rep.antisymmetric.ok)
                    and rep.validate(S, R) and not ws and wit is not None,
                    f"witness {rep.antisymmetric.witness}")


# ---------------------------------------------------------------------------
# 4: regular => weakly separative


@_timed("regular semigroups are weakly separative", 5.0)
def regular_weakly_separative(res: SuiteResult, seed: int, ctx: ToleranceContext):
    for name, S in [("T3", full_transformation_semigroup(3)), ("M2(Z2)", matrix_semigroup(2, 2)),
                    ("T2", full_transformation_semigroup(2)), ("M2(Z3)", matrix_semigroup(2, 3))]:
        reg = is_regular_semigroup(S)
        ws, wit = is_weakly_separative(S)
        res.add(f"{name} ({S.size} elements) regular and weakly separative", reg and ws,
                f"regular={reg}, weakly separative={ws}")


# ---------------------------------------------------------------------------
# 5: entrywise order


@_timed("entrywise order on M2(Z+)", 5.0)
def entrywise_suite(res: SuiteResult, seed: int, ctx: ToleranceContext):
    from . import kernels

    mats = [Matrix(INT, 2, 2, t) for t in itertools.product(range(3), repeat=4)]
    n = len(mats)
    L = np.array([[entrywise_leq(A, B) for B in mats] for A in mats])
    res.add("reflexive", kernels.reflexive_violation(L) < 0)
    res.add("antisymmetric", kernels.antisymmetric_violation(L)[0] < 0)
    res.add("transitive", kernels.transitive_violation(L)[0] < 0, f"{n}^3 triples")
    X = np.array([m.to_int_array() for m in mats])
    i, j = np.nonzero(L)
    A, B = X[i], X[j]
    ok = True
    for C in X:
        ok &= bool(((C @ A) <= (C @ B)).all() and ((A @ C) <= (B @ C)).all())
    res.add("compatible", ok, f"{len(i)} related pairs x {n} multipliers, both sides")
    a, b, c = entrywise_compat_counterexample(2)
    ca, cb = mat_mul(c, a), mat_mul(c, b)
    fails = all(x <= y for x, y in zip(a.entries, b.entries)) and not all(
        x <= y for x, y in zip(ca.entries, cb.entries))
    res.add("integer counterexample breaks compatibility", fails,
            f"A={_fmt(a)} <= B={_fmt(b)}, C={_fmt(c)}: CA={_fmt(ca)} not <= CB={_fmt(cb)}")
    res.counts.update(elements=n, related_pairs=int(L.sum()))


# ---------------------------------------------------------------------------
# 6-7: star orders


def _star_common(res: SuiteResult, pairs, chains, randoms, exact: bool, anti_tol: float, ctx):
    refl = sum(1 for A in randoms if not (left_star_leq(A, A, ctx) and right_star_leq(A, A, ctx)))
    res.add("reflexivity (left and right)", refl == 0, f"{refl} failures of {len(randoms)}")
    anti_bad = both = 0
    for A, B in pairs:
        if left_star_leq(A, B, ctx) and left_star_leq(B, A, ctx):
            both += 1
            if exact:
                anti_bad += A != B
            else:
                anti_bad += max_abs_diff(A, B) > anti_tol
    res.add("antisymmetry", anti_bad == 0 and both > 0,
            f"{both} pairs related both ways, {anti_bad} with A != B")
    trans_bad = 0
    for A, B, C in chains:
        if left_star_leq(A, B, ctx) and left_star_leq(B, C, ctx) and not left_star_leq(A, C, ctx):
            trans_bad += 1
    res.add("transitivity", trans_bad == 0, f"{trans_bad} failures of {len(chains)} chains")
    dual_bad = sum(1 for A, B in pairs[: min(100, len(pairs))]
                   if right_star_leq(A, B, ctx) != left_star_leq(conj_transpose(A), conj_transpose(B), ctx))
    res.add("right star = left star of conjugate transposes", dual_bad == 0,
            f"{dual_bad} mismatches")
    compat_bad = 0
    first = None
    k = len(pairs)
    for idx in range(k):
        A, B = pairs[idx]
        C, D = pairs[(idx + 1) % k]
        if not left_star_leq(mat_mul(A, C), mat_mul(B, D), ctx):
            compat_bad += 1
            if first is None:
                first = idx
    res.add("compatibility A*<=B, C*<=D => AC *<= BD", compat_bad == 0,
            f"{compat_bad} failures of {k} (first at instance {first})")
    res.counts.update(instances=k, both_ways=both, compat_failures=compat_bad)


@_timed("left/right star orders, cf64", 10.0)
def star_float(res: SuiteResult, seed: int, ctx: ToleranceContext):
    rng = np.random.default_rng(seed)
    pairs = [gen.gen_star_pair(3, rng, subset=range(3) if k % 5 == 0 else None) for k in range(500)]
    chains = [gen.gen_star_chain(3, rng) for _ in range(500)]
    randoms = [Matrix.from_numpy(gen.complex_normal(3, 3, rng)) for _ in range(500)]
    _star_common(res, pairs, chains, randoms, exact=False, anti_tol=1e-8, ctx=ctx)


@_timed("left/right star orders, Gaussian rationals", 30.0)
def star_exact(res: SuiteResult, seed: int, ctx: ToleranceContext):
    rng = np.random.default_rng(seed)
    pairs = []
    for k in range(50):
        if k % 5 == 0:
            _, B = gen.gen_star_pair_exact(3, rng)
            pairs.append((B, B))
        else:
            pairs.append(gen.gen_star_pair_exact(3, rng))
    chains = [gen.gen_star_chain_exact(3, rng) for _ in range(50)]
    randoms = [gen.random_gauss(3, 3, rng) for _ in range(50)]
    _star_common(res, pairs, chains, randoms, exact=True, anti_tol=0.0, ctx=ctx)
    A, B, C, D = star_compat_counterexample()
    res.add("explicit 2x2 compatibility counterexample is valid",
            left_star_leq(A, B) and left_star_leq(C, D) and not left_star_leq(mat_mul(A, C), mat_mul(B, D)),
            f"A={_fmt(A)}, B={_fmt(B)}, C=D={_fmt(C)}")


# ---------------------------------------------------------------------------
# 8: Moore-Penrose


def _dyadic_complex(rows, cols, rng):
    re = rng.integers(-32, 33, size=(rows, cols)) / 16
    im = rng.integers(-32, 33, size=(rows, cols)) / 16
    return re + 1j * im


def _float_to_gauss(M: Matrix) -> Matrix:
    return Matrix(GAUSS, M.rows, M.cols,
                  tuple(GaussianRational(Fraction(z.real), Fraction(z.imag)) for z in M.entries))


@_timed("Moore-Penrose inverse", 10.0)
def moore_penrose_suite(res: SuiteResult, seed: int, ctx: ToleranceContext):
    rng = np.random.default_rng(seed)
    worst = 0.0
    worst_diff = 0.0
    ranks = []
    for k in range(200):
        r = 4 - (k % 5)  # 4, 3, 2, 1, 0
        if r == 4:
            a = _dyadic_complex(4, 4, rng)
        elif r == 0:
            a = np.zeros((4, 4), dtype=complex)
        else:
            a = _dyadic_complex(4, r, rng) @ _dyadic_complex(r, 4, rng)
        A = Matrix.from_numpy(a)
        X = moore_penrose(A, ctx)
        worst = max(worst, *penrose_residuals(A, X))
        Ae = _float_to_gauss(A)
        ranks.append(rank(Ae))
        Xe = moore_penrose(Ae)
        xe = Xe.to_numpy()
        worst_diff = max(worst_diff, float(np.abs(X.to_numpy() - xe).max() / (1 + np.abs(xe).max())))
    res.add("float Penrose conditions, 200 complex 4x4", worst <= 1e-10, f"max relative residual {worst:.2e}")
    res.add("float result equals exact pseudoinverse of the same matrix", worst_diff <= 1e-8,
            f"max relative difference {worst_diff:.2e}; exact ranks {sorted(set(ranks))}")
    exact_bad = uniq_bad = 0
    for r in range(4):
        for _ in range(20):
            A = gen.gauss_of_rank(3, r, rng)
            X = moore_penrose(A)
            exact_bad += not satisfies_penrose(A, X)
            uniq_bad += X != greville_pinv(A)
    res.add("exact Penrose conditions, 20 per rank 0..3", exact_bad == 0, f"{exact_bad} failures")
    res.add("exact uniqueness against Greville recursion", uniq_bad == 0, f"{uniq_bad} mismatches")


# ---------------------------------------------------------------------------
# 9: Loewner and Schur


@_timed("Loewner order and Schur product theorem", 10.0)
def loewner_schur(res: SuiteResult, seed: int, ctx: ToleranceContext):
    rng = np.random.default_rng(seed)
    schur_bad = compat_bad = anti_bad = refl_bad = trans_bad = both = 0
    worst = np.inf
    for k in range(500):
        A = gen.gen_psd(4, rng, rank=int(rng.integers(1, 5)))
        B = gen.gen_psd(4, rng)
        AB = hadamard(A, B)
        ab = AB.to_numpy()
        lam = float(np.linalg.eigvalsh((ab + ab.conj().T) / 2)[0])
        margin = lam + 1e-9 * (1 + np.abs(ab).max())
        worst = min(worst, margin)
        schur_bad += margin < 0
        # A <= A + P, C <= C + Q with everything PSD
        Bp = A + gen.gen_psd(4, rng, rank=int(rng.integers(0, 5)))
        C = B
        Dp = C + gen.gen_psd(4, rng, rank=int(rng.integers(0, 5)))
        if loewner_leq(A, Bp, ctx) and loewner_leq(C, Dp, ctx):
            compat_bad += not loewner_leq(hadamard(A, C), hadamard(Bp, Dp), ctx)
        else:
            compat_bad += 1
        refl_bad += not loewner_leq(A, A, ctx)
        Cp = Bp + gen.gen_psd(4, rng, rank=int(rng.integers(0, 5)))
        trans_bad += not loewner_leq(A, Cp, ctx)
        t = (0.0, 1e-13, 1.0)[k % 3]
        near = Matrix.from_numpy(A.to_numpy() + t * gen.gen_psd(4, rng).to_numpy())
        if loewner_leq(A, near, ctx) and loewner_leq(near, A, ctx):
            both += 1
            anti_bad += max_abs_diff(A, near) > 1e-8
    res.add("Schur product theorem on 500 PSD pairs", schur_bad == 0,
            f"min of lambda_min + 1e-9(1+|AoB|) = {worst:.2e}")
    res.add("Hadamard compatibility of the Loewner order", compat_bad == 0, f"{compat_bad} failures")
    res.add("reflexive", refl_bad == 0)
    res.add("transitive", trans_bad == 0)
    res.add("antisymmetric", anti_bad == 0 and both > 0, f"{both} pairs related both ways")
    res.add("0 <= A iff A is PSD", loewner_leq(Matrix.zeros(4, 4, CF64), gen.gen_psd(4, rng), ctx)
            and not loewner_leq(Matrix.zeros(2, 2, CF64), Matrix.from_rows([[1, 2], [2, 1]], CF64), ctx))


@_timed("Schur product theorem", 10.0)
def schur_suite(res: SuiteResult, seed: int, ctx: ToleranceContext):
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(500):
        A = gen.gen_psd(4, rng, rank=int(rng.integers(1, 5)))
        B = gen.gen_psd(4, rng, rank=int(rng.integers(1, 5)))
        bad += not is_psd(hadamard(A, B), ctx).verdict
    res.add("A o B is PSD for 500 generated PSD pairs", bad == 0, f"{bad} failures")
    exact_bad = 0
    for _ in range(30):
        A, B = gen.gen_psd_exact(3, rng), gen.gen_psd_exact(3, rng)
        exact_bad += not is_psd(hadamard(A, B)).verdict
    res.add("A o B is PSD exactly for 30 Gaussian-rational pairs", exact_bad == 0)
    found = None
    for _ in range(100):
        A, B = gen.gen_psd_exact(2, rng, bound=2), gen.gen_psd_exact(2, rng, bound=2)
        AB = mat_mul(A, B)
        if not is_hermitian(AB):
            found = (A, B, AB)
            break
    res.add("conventional product of PSD matrices need not be PSD", found is not None,
            f"A={_fmt(found[0])}, B={_fmt(found[1])}, AB={_fmt(found[2])} not Hermitian" if found else "")


# ---------------------------------------------------------------------------
# 10: PSD toolkit


@_timed("PSD toolkit", 10.0)
def psd_toolkit(res: SuiteResult, seed: int, ctx: ToleranceContext):
    import scipy.linalg

    rng = np.random.default_rng(seed)
    sqrt_bad = uniq_bad = 0
    worst = 0.0
    for k in range(100):
        A = gen.gen_psd(4, rng, rank=int(rng.integers(1, 5)))
        B = psd_sqrt(A, ctx)
        a, b = A.to_numpy(), B.to_numpy()
        rel = float(np.abs(b @ b - a).max() / (1 + np.abs(a).max()))
        worst = max(worst, rel)
        sqrt_bad += rel > 1e-8 or not is_psd(B, ctx).verdict or not is_hermitian(B, ctx)
        if k % 2 == 0:
            A3 = gen.gen_psd(3, rng)
            other = scipy.linalg.sqrtm(A3.to_numpy())
            uniq_bad += float(np.abs(psd_sqrt(A3, ctx).to_numpy() - other).max()) > 1e-8 * (1 + np.abs(other).max())
    res.add("psd_sqrt reconstruction on 100 instances", sqrt_bad == 0, f"max relative residual {worst:.2e}")
    res.add("psd_sqrt agrees with an independent Schur-based square root", uniq_bad == 0,
            f"{uniq_bad} mismatches on 50 instances")
    minors_bad = sum(not psd_necessary_minors(gen.gen_psd(4, rng), ctx) for _ in range(100))
    res.add("principal minors nonnegative on 100 PSD matrices", minors_bad == 0)
    res.add("principal minors detect [[1,2],[2,1]]",
            not psd_necessary_minors(Matrix.from_rows([[1, 2], [2, 1]], CF64), ctx)
            and not psd_necessary_minors(Matrix.from_rows([[1, 2], [2, 1]], RAT), ctx))
    cong_bad = 0
    for k in range(100):
        if k % 2 == 0:
            A = gen.gen_psd(4, rng, rank=int(rng.integers(1, 5)))
        else:
            Q, _ = np.linalg.qr(gen.complex_normal(4, 4, rng))
            lam = rng.uniform(0.5, 3.0, 4) * np.array([1, -1, 1, 1])
            A = Matrix.from_numpy(((Q * lam) @ Q.conj().T + ((Q * lam) @ Q.conj().T).conj().T) / 2)
        P = gen.complex_normal(4, 4, rng) + 2 * np.eye(4)
        PAP = Matrix.from_numpy(P.conj().T @ A.to_numpy() @ P)
        cong_bad += is_psd(A, ctx).verdict != is_psd(PAP, ctx).verdict
    res.add("congruence invariance on 100 random invertible P", cong_bad == 0, f"{cong_bad} mismatches")
    approx_bad = 0
    for k in range(1, 21):
        A = gen.gen_psd_exact(3, rng, rank=int(rng.integers(0, 4)))
        Ak = psd_approx_term(A, k)
        gap = sub(Ak, A)
        approx_bad += gap != Matrix.diag([Fraction(1, k)] * 3, GAUSS)
        cert = is_psd(Ak)
        approx_bad += not (cert.verdict and all(p.re > 0 for p in cert.pivots))
    res.add("A + I/k differs by exactly I/k and is positive definite", approx_bad == 0)
    res.counts.update(sqrt_instances=100)


# ---------------------------------------------------------------------------
# 11: largest compatible order


@_timed("largest compatible order inside P", 60.0)
def p1_maximality(res: SuiteResult, seed: int, ctx: ToleranceContext):
    rng = np.random.default_rng(seed)
    bad = []
    total_found = 0
    sizes = []
    nontrivial = 0
    for k in range(20):
        S = random_small_semigroup(rng, 6)
        P = random_partial_order(S, rng, density=float(rng.uniform(0.3, 1.0)))
        P1 = largest_compatible_order(S, P)
        nontrivial += len(P1) > S.size
        best, found = brute_largest_compatible(S, P)
        total_found += found
        sizes.append(S.size)
        rep = check_order(S, P1)
        if best is None or P1 != best or not rep.all_pass or not (P1 <= P):
            bad.append(k)
    res.add("20 random semigroups: P1 equals the brute-force maximum", not bad,
            f"sizes {sizes}; {total_found} compatible suborders enumerated; "
            f"{nontrivial} results beyond the diagonal; failures {bad}")


# ---------------------------------------------------------------------------
# 12: s-invariant


def _compatible_corpus(S, rng):
    rels = [Relation.identity(S), Relation.full(S), conrad_relation(S)]
    for _ in range(5):
        rels.append(largest_compatible_order(S, random_partial_order(S, rng, 0.5)))
    return [R for R in rels if check_order(S, R).compatible.ok]


@_timed("s-invariant semigroups", 10.0)
def s_invariant_suite(res: SuiteResult, seed: int, ctx: ToleranceContext):
    rng = np.random.default_rng(seed)
    for name, S in [("T2", full_transformation_semigroup(2)), ("M2(Z2)", matrix_semigroup(2, 2)),
                    ("M2(Z2) hadamard", matrix_semigroup(2, 2, ProductKind.HADAMARD))]:
        rels = _compatible_corpus(S, rng)
        assoc_bad = compat_bad = 0
        for s in range(S.size):
            Ss = s_invariant(S, s)
            assoc_bad += associativity_violation(Ss.table) is not None
            compat_bad += sum(not check_order(Ss, Relation(Ss, R.adj)).compatible.ok for R in rels)
        res.add(f"{name}: all {S.size} s-invariants associative", assoc_bad == 0)
        res.add(f"{name}: {len(rels)} compatible relations stay compatible", compat_bad == 0,
                f"{compat_bad} failures")


# ---------------------------------------------------------------------------
# catalogs

CRITERIA = {
    1: conrad_oracle_equivalence,
    2: conrad_ordered_semigroup,
    3: burgess_raphael,
    4: regular_weakly_separative,
    5: entrywise_suite,
    6: star_float,
    7: star_exact,
    8: moore_penrose_suite,
    9: loewner_schur,
    10: psd_toolkit,
    11: p1_maximality,
    12: s_invariant_suite,
}

LEMMAS = {
    "weak-sep": [regular_weakly_separative],
    "conrad-order": [conrad_oracle_equivalence, conrad_ordered_semigroup, burgess_raphael],
    "star-order": [star_float, star_exact],
    "loewner-order": [loewner_schur],
    "entrywise": [entrywise_suite],
    "schur": [schur_suite],
    "p1": [p1_maximality],
    "s-invariant": [s_invariant_suite],
    "moore-penrose": [moore_penrose_suite],
    "psd": [psd_toolkit],
}


def run_suite(lemma_id: str, seed: int = 0, ctx: ToleranceContext = DEFAULT_CTX) -> list[SuiteResult]:
    if lemma_id not in LEMMAS:
        raise KeyError(f"unknown lemma id {lemma_id!r}; known: {', '.join(LEMMAS)}")
    return [fn(seed, ctx) for fn in LEMMAS[lemma_id]]
