"""Command-line front end: ``matorder <command> ...``.

Exit codes: 0 success or comparable, 1 semantic negative, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

import numpy as np

from . import suites
from ._accel import BACKEND
from .matrix import ShapeError, ToleranceContext, max_abs_diff, sub
from .orders import (IDENTITY, LOEWNER, ORDER_NAMES, ENTRYWISE, LEFT_STAR, RIGHT_STAR, OrderKind,
                     conrad_leq, conrad_leq_oracle, conrad_witness, left_star_failure, leq, parse_order,
                     right_star_failure)
from .scalar import DomainError
from .semigroup import (NotAssociativeError, check_order, conrad_relation, hasse_edges, is_regular_semigroup,
                        is_weakly_separative, largest_compatible_order, materialize_order, parse_generator_spec,
                        random_partial_order, random_small_semigroup)
from .textio import ParseError, read_matrix, read_semigroup, to_dot

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _ctx(args) -> ToleranceContext:
    return ToleranceContext(eps_eq=args.eps_eq, eps_psd=args.eps_psd, eps_rank=args.eps_rank)


def _tolerances(args) -> dict:
    return {"eps_eq": args.eps_eq, "eps_psd": args.eps_psd, "eps_rank": args.eps_rank}


def _header(args, floating: bool) -> list[str]:
    if not floating:
        return []
    t = _tolerances(args)
    return [f"# tolerances: eps_eq={t['eps_eq']:g} eps_psd={t['eps_psd']:g} eps_rank={t['eps_rank']:g}"]


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        payload.setdefault("tolerances", _tolerances(args))
        payload.setdefault("seed", args.seed)
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print("\n".join(lines))


def _load_semigroup(args):
    if bool(args.gen) == bool(args.file):
        raise InputError("give exactly one of --gen SPEC or --file PATH")
    if args.gen:
        return parse_generator_spec(args.gen)
    return read_semigroup(args.file)


# ---------------------------------------------------------------------------
# compare


def _evidence(A, B, kind: OrderKind, ctx) -> Optional[str]:
    """Why A <= B fails, or None."""
    if kind.name == "conrad":
        w = conrad_witness(A, B, kind.product, ctx)
        return None if w is None else str(w)
    if kind == LOEWNER:
        from .psd import is_psd

        cert = is_psd(sub(B, A), ctx)
        if cert.verdict:
            return None
        if cert.asymmetry is not None:
            i, j = cert.asymmetry
            return f"B-A is not Hermitian at ({i + 1},{j + 1})"
        parts = []
        if cert.min_eigenvalue is not None:
            parts.append(f"min eigenvalue of B-A = {cert.min_eigenvalue:.6g}")
        if cert.vector is not None:
            v = " ".join(cert.vector.domain.format(x) for x in cert.vector.entries)
            parts.append(f"v=[{v}] gives v*(B-A)v = {_real(cert.value)}")
        return "; ".join(parts)
    if kind == LEFT_STAR:
        return left_star_failure(A, B, ctx)
    if kind == RIGHT_STAR:
        return right_star_failure(A, B, ctx)
    if kind == ENTRYWISE:
        if leq(A, B, kind, ctx):
            return None
        for idx, (x, y) in enumerate(zip(A.entries, B.entries)):
            if x > y:
                return f"entry ({idx // A.cols + 1},{idx % A.cols + 1}): {x} > {y}"
    if kind == IDENTITY:
        return None if leq(A, B, kind, ctx) else f"max |A-B| = {max_abs_diff(A, B):.6g}"
    return None if leq(A, B, kind, ctx) else "relation does not hold"


def _real(x):
    if isinstance(x, complex):
        return f"{x.real:.6g}"
    return str(getattr(x, "re", x))


def cmd_compare(args) -> int:
    kind = parse_order(args.order)
    ctx = _ctx(args)
    A, B = read_matrix(args.files[0]), read_matrix(args.files[1])
    fwd = _evidence(A, B, kind, ctx)
    bwd = _evidence(B, A, kind, ctx)
    verdict = {(True, True): "EQ", (True, False): "LEQ", (False, True): "GEQ",
               (False, False): "INCOMPARABLE"}[(fwd is None, bwd is None)]
    lines = _header(args, not A.domain.exact) + [verdict]
    if fwd is not None:
        lines.append(f"  A <= B fails: {fwd}")
    if bwd is not None:
        lines.append(f"  B <= A fails: {bwd}")
    _emit(args, {"command": "compare", "order": str(kind), "verdict": verdict,
                 "witnesses": {"a_leq_b": fwd, "b_leq_a": bwd}, "counts": {}}, lines)
    return EXIT_NEGATIVE if verdict == "INCOMPARABLE" else EXIT_OK


# ---------------------------------------------------------------------------
# semigroup commands


def _relation(S, args):
    kind = parse_order(args.order)
    return kind, materialize_order(S, kind, _ctx(args))


def cmd_check_axioms(args) -> int:
    S = _load_semigroup(args)
    kind, R = _relation(S, args)
    rep = check_order(S, R)
    floating = S.realization is not None and not S.realization[0][0].domain.exact
    lines = _header(args, floating) + [f"semigroup of {S.size} elements, order {kind}, {len(R)} related pairs"]
    for name, v in rep.items():
        line = f"{name:14s} {'PASS' if v.ok else 'FAIL'}"
        if not v.ok:
            line += "  witness " + ", ".join(S.label(i) for i in v.witness)
            line += f"  (indices {v.witness})"
        lines.append(line)
    _emit(args, {"command": "check-axioms", "order": str(kind), "verdict": rep.all_pass,
                 "axioms": {n: v.ok for n, v in rep.items()},
                 "witnesses": {n: (list(v.witness) if v.witness else None) for n, v in rep.items()},
                 "counts": {"elements": S.size, "pairs": len(R)}}, lines)
    return EXIT_OK if rep.all_pass else EXIT_NEGATIVE


def cmd_survey(args) -> int:
    S = _load_semigroup(args)
    ws, ws_wit = is_weakly_separative(S)
    rho = conrad_relation(S)
    rep = check_order(S, rho)
    ident, zero = S.identity(), S.zero()
    facts = {
        "elements": S.size,
        "commutative": S.is_commutative(),
        "identity": None if ident is None else S.label(ident),
        "zero": None if zero is None else S.label(zero),
        "idempotents": len(S.idempotents()),
        "regular": is_regular_semigroup(S),
        "weakly_separative": ws,
        "conrad_pairs": len(rho),
        "conrad_partial_order": rep.partial_order,
        "conrad_compatible": rep.compatible.ok,
    }
    lines = [f"{k:22s} {v}" for k, v in facts.items()]
    if ws_wit is not None:
        lines.append(f"{'separativity witness':22s} {S.label(ws_wit[0])}, {S.label(ws_wit[1])}")
    _emit(args, {"command": "survey", "verdict": True, "counts": facts,
                 "witnesses": {"weak_separativity": list(ws_wit) if ws_wit else None}}, lines)
    return EXIT_OK


def cmd_hasse(args) -> int:
    S = _load_semigroup(args)
    kind, R = _relation(S, args)
    rep = check_order(S, R)
    if not rep.partial_order:
        print(f"order {kind} is not a partial order here: {rep.summary()}", file=sys.stderr)
        return EXIT_NEGATIVE
    edges = hasse_edges(S, R)
    dot = to_dot(S, R, edges=edges)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
        print(f"wrote {len(edges)} covering pairs to {args.out}")
    else:
        sys.stdout.write(dot)
    return EXIT_OK


# ---------------------------------------------------------------------------
# oracle-diff


def _diff_conrad(args, rng) -> dict:
    from .semigroup import matrix_semigroup
    from .matrix import ProductKind

    prod = ProductKind(args.product)
    S = matrix_semigroup(args.n, args.m, prod)
    mats = S.realization[0]
    related = np.argwhere(conrad_relation(S).adj)
    picks = [tuple(rng.integers(0, S.size, 2)) for _ in range(args.pairs // 2)]
    picks += [tuple(related[k]) for k in rng.integers(0, len(related), args.pairs - len(picks))]
    bad = [[int(i), int(j)] for i, j in picks
           if conrad_leq(mats[i], mats[j], prod) != conrad_leq_oracle(mats[i], mats[j], prod)]
    return {"pairs": len(picks), "disagreements": len(bad), "first": bad[0] if bad else None}


def _diff_pinv(args, rng) -> dict:
    from .generators import gauss_of_rank
    from .ginv import moore_penrose
    from .oracles import greville_pinv

    bad = []
    for k in range(args.pairs):
        A = gauss_of_rank(args.n, int(rng.integers(0, args.n + 1)), rng)
        if moore_penrose(A) != greville_pinv(A):
            bad.append(k)
    return {"pairs": args.pairs, "disagreements": len(bad), "first": bad[0] if bad else None}


def _diff_p1(args, rng) -> dict:
    from .oracles import brute_largest_compatible

    bad = []
    for k in range(args.pairs):
        S = random_small_semigroup(rng, 6)
        P = random_partial_order(S, rng, float(rng.uniform(0.3, 1.0)))
        best, _ = brute_largest_compatible(S, P)
        if best is None or largest_compatible_order(S, P) != best:
            bad.append(k)
    return {"pairs": args.pairs, "disagreements": len(bad), "first": bad[0] if bad else None}


def _diff_kernels(args, rng) -> dict:
    from . import kernels
    from .semigroup import matrix_semigroup

    T = matrix_semigroup(args.n, args.m).table
    A = rng.integers(0, 2, size=(T.shape[0],) * 2).astype(np.bool_)
    names = ["assoc_violation", "regular_elements", "weak_sep_violation", "conrad_relation"]
    inputs = {name: (T,) for name in names}
    inputs.update(transitive_violation=(A,), antisymmetric_violation=(A,), compatible_violation=(T, A))
    results = {name: bool(np.array_equal(np.asarray(kernels.JIT[name](*x)), np.asarray(kernels.NUMPY[name](*x))))
               for name, x in inputs.items()}
    bad = [k for k, v in results.items() if not v]
    return {"pairs": len(results), "disagreements": len(bad), "first": bad[0] if bad else None,
            "backend": BACKEND}


def cmd_oracle_diff(args) -> int:
    rng = np.random.default_rng(args.seed)
    runner = {"conrad": _diff_conrad, "pinv": _diff_pinv, "p1": _diff_p1, "kernels": _diff_kernels}[args.target]
    t0 = time.perf_counter()
    res = runner(args, rng)
    secs = time.perf_counter() - t0
    ok = res["disagreements"] == 0
    lines = [f"{args.target}: {res['pairs']} cases, {res['disagreements']} disagreements "
             f"({secs:.2f}s) {'PASS' if ok else 'FAIL'}"]
    if res["first"] is not None:
        lines.append(f"  first disagreement: {res['first']}")
    _emit(args, {"command": "oracle-diff", "target": args.target, "verdict": ok,
                 "witnesses": {"first": res["first"]}, "counts": res}, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# reproduce


def cmd_reproduce(args) -> int:
    if args.lemma not in suites.LEMMAS:
        raise InputError(f"unknown lemma id {args.lemma!r}; known: {', '.join(suites.LEMMAS)}")
    results = suites.run_suite(args.lemma, seed=args.seed, ctx=_ctx(args))
    ok = all(r.passed for r in results)
    lines = _header(args, True) + [f"reproduce {args.lemma} (seed {args.seed}, backend {BACKEND})"]
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} [{r.seconds:.2f}s]")
        lines += r.lines()
    lines.append("PASS" if ok else "FAIL")
    _emit(args, {"command": "reproduce", "lemma": args.lemma, "verdict": ok,
                 "suites": [r.to_dict() for r in results],
                 "counts": {"suites": len(results), "checks": sum(len(r.checks) for r in results)},
                 "witnesses": {}}, lines)
    return EXIT_OK if ok else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps-eq", type=float, default=1e-9, help="equality tolerance (default 1e-9)")
    common.add_argument("--eps-psd", type=float, default=1e-9, help="PSD eigenvalue tolerance (default 1e-9)")
    common.add_argument("--eps-rank", type=float, default=1e-10, help="relative rank cutoff (default 1e-10)")
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--gen", help="generator spec: mat:n:m:conv|had, tfull:n, null:k, lz:k, rz:k, cyclic:k")
    source.add_argument("--file", help="semigroup table file")

    orders = sorted(ORDER_NAMES)
    p = argparse.ArgumentParser(prog="matorder", description="Partial orders on matrices and finite semigroups.")
    sub_ = p.add_subparsers(dest="command", required=True)

    c = sub_.add_parser("compare", parents=[common], help="compare two matrix files under an order")
    c.add_argument("files", nargs=2, metavar="FILE")
    c.add_argument("--order", required=True, choices=orders)
    c.set_defaults(func=cmd_compare)

    a = sub_.add_parser("check-axioms", parents=[common, source], help="check the four order axioms")
    a.add_argument("--order", default="conrad", choices=orders)
    a.set_defaults(func=cmd_check_axioms)

    s = sub_.add_parser("survey", parents=[common, source], help="structural profile of a semigroup")
    s.set_defaults(func=cmd_survey)

    h = sub_.add_parser("hasse", parents=[common, source], help="DOT Hasse diagram of an order")
    h.add_argument("--order", default="conrad", choices=orders)
    h.add_argument("--out", help="write DOT here instead of stdout")
    h.set_defaults(func=cmd_hasse)

    o = sub_.add_parser("oracle-diff", parents=[common], help="fast path against brute-force oracle")
    o.add_argument("target", choices=["conrad", "pinv", "p1", "kernels"])
    o.add_argument("--n", type=int, default=2, help="matrix size (default 2)")
    o.add_argument("--m", type=int, default=3, help="modulus for conrad and kernels (default 3)")
    o.add_argument("--product", choices=["conventional", "hadamard"], default="conventional")
    o.add_argument("--pairs", type=int, default=500, help="number of cases (default 500)")
    o.set_defaults(func=cmd_oracle_diff)

    r = sub_.add_parser("reproduce", parents=[common], help="run a lemma reproduction suite")
    r.add_argument("lemma", metavar="LEMMA", help="one of: " + ", ".join(suites.LEMMAS))
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ParseError, DomainError, ShapeError, NotAssociativeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
