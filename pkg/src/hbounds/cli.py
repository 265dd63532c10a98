"""Command line interface: ``hbounds <command> <tensor.json> [options]``.

Exit codes: 0 success, 1 bad input, 2 infeasible request, 3 containment
violation found by ``check``.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from .classify import FLAGS, QUASI_PAPER, QUASI_THEOREM, certify_positive_definite, classify_all
from .heig import InfeasibleRequestError, heig_exact_n2, sshopm_both_ends, verify_containment
from .inclusion import (
    SET_NAMES,
    TILDE_CORRECTED,
    TILDE_LITERAL,
    InclusionPreconditionWarning,
    all_sets,
    inclusion_set,
)
from .io import TensorFileError, load
from .tensor import TensorSizeError, is_symmetric, pair_profile, row_profile

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_VIOLATION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _g(x: float) -> str:
    return f"{x:.6g}"


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, allow_nan=False))


def cmd_profile(A, args) -> int:
    rows = row_profile(A)
    pairs = [pair_profile(A, i, j) for i in range(A.dim) for j in range(A.dim) if i != j]
    if args.json:
        _emit_json(
            {
                "rows": [dict(vars(p), index=p.index + 1) for p in rows],
                "pairs": [dict(vars(p), i=p.i + 1, j=p.j + 1) for p in pairs],
            }
        )
        return EXIT_OK
    print(f"{'i':>3} {'diag':>10} {'r':>10} {'beta':>10} {'gamma':>10} {'Delta':>10} {'Theta':>10} {'alpha':>10}")
    for p in rows:
        vals = (p.diag, p.r, p.beta, p.gamma, p.delta, p.theta, p.alpha)
        print(f"{p.index + 1:>3} " + " ".join(f"{_g(v):>10}" for v in vals))
    print()
    print(f"{'i':>3} {'j':>3} {'a_ji..i':>10} {'r_j^i':>10} {'Delta_j^i':>10} {'Theta_j^i':>10}")
    for p in pairs:
        vals = (p.a_ji, p.r_j_i, p.delta_j_i, p.theta_j_i)
        print(f"{p.i + 1:>3} {p.j + 1:>3} " + " ".join(f"{_g(v):>10}" for v in vals))
    return EXIT_OK


def cmd_classify(A, args) -> int:
    report = classify_all(A, quasi_variant=args.quasi_def)
    if args.json:
        _emit_json(report.to_json())
        return EXIT_OK
    data = report.to_json()
    for name in FLAGS:
        mark = "✓" if data["flags"][name] else "✗"
        line = f"{name.replace('_', '-'):<20} {mark}"
        w = data["witnesses"].get(name)
        if w:
            pair = f"i={w['i']}" + (f", j={w['j']}" if w["j"] is not None else "")
            line += f"   {w['rule']} fails at {pair}: {_g(w['lhs'])} vs {_g(w['rhs'])}"
        print(line)
    return EXIT_OK


def cmd_intervals(A, args) -> int:
    names = SET_NAMES if args.set == "all" else (args.set,)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", InclusionPreconditionWarning)
        sets = {name: inclusion_set(A, name, tilde=args.tilde) for name in names}
    if args.json:
        _emit_json(
            {name: {"set": s.to_json(), "hull": s.hull().to_json()} for name, s in sets.items()}
        )
        return EXIT_OK
    for name, s in sets.items():
        text = s.hull().format() if args.hull else s.format()
        print(text if len(sets) == 1 else f"{name}: {text}")
    return EXIT_OK


def _eigenpairs(A, method, starts, seed, tol):
    if method is None:
        method = "exact2" if A.dim == 2 else "sshopm"
    if method == "exact2":
        return heig_exact_n2(A, tol=tol if tol is not None else 1e-9)
    if not is_symmetric(A):
        raise InfeasibleRequestError("sshopm needs a symmetric tensor")
    return sshopm_both_ends(A, starts=starts, seed=seed, tol=1e-10 if tol is None else tol)


def _pair_json(p):
    return {"lambda": p.lam, "x": p.x.tolist(), "residual": p.residual}


def cmd_eigs(A, args) -> int:
    pairs = _eigenpairs(A, args.method, args.starts, args.seed, args.tol)
    if args.json:
        _emit_json([_pair_json(p) for p in pairs])
        return EXIT_OK
    for p in pairs:
        vec = ", ".join(_g(v) for v in p.x)
        print(f"{_g(p.lam):>12}   x = ({vec})   residual {p.residual:.1e}")
    return EXIT_OK


def cmd_certify(A, args) -> int:
    cert = certify_positive_definite(A)
    if args.json:
        _emit_json(cert.to_json())
        return EXIT_OK
    line = f"{cert.verdict} ({cert.reason})"
    if cert.eigen_lower_bound is not None:
        line += f"; H-eigenvalues >= {_g(cert.eigen_lower_bound)}"
    print(line)
    return EXIT_OK


def cmd_check(A, args) -> int:
    pairs = _eigenpairs(A, args.method, args.starts, args.seed, args.tol)
    sets = all_sets(A, tilde=args.tilde)
    rows = verify_containment(A, pairs, sets)
    violated = any(not r.ok for r in rows)
    if args.json:
        _emit_json(
            {
                "eigenvalues": [_pair_json(p) for p in pairs],
                "sets": {name: s.to_json() for name, s in sets.items()},
                "containment": [{"lambda": r.lam, "member": r.member} for r in rows],
                "violation": violated,
            }
        )
    else:
        for name, s in sets.items():
            print(f"{name:<20} {s}")
        print()
        print(f"{'lambda':>12}  " + " ".join(f"{n:>18}" for n in sets))
        for r in rows:
            print(f"{_g(r.lam):>12}  " + " ".join(f"{'in' if r.member[n] else 'OUT':>18}" for n in sets))
        print("violation" if violated else "all eigenvalues contained")
    return EXIT_VIOLATION if violated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="tensor JSON file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    def eig_opts(p):
        p.add_argument("--method", choices=["exact2", "sshopm"], default=None)
        p.add_argument("--starts", type=int, default=50)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=None)

    add("profile", cmd_profile, "row and pair statistics")
    p = add("classify", cmd_classify, "class membership with witnesses")
    p.add_argument("--quasi-def", choices=[QUASI_THEOREM, QUASI_PAPER], default=QUASI_THEOREM)
    p = add("intervals", cmd_intervals, "eigenvalue inclusion sets")
    p.add_argument("--set", choices=[*SET_NAMES, "all"], default="all")
    p.add_argument("--hull", action="store_true")
    p.add_argument("--tilde", choices=[TILDE_CORRECTED, TILDE_LITERAL], default=TILDE_CORRECTED)
    eig_opts(add("eigs", cmd_eigs, "real H-eigenpairs"))
    add("certify", cmd_certify, "positive-definiteness certificate")
    p = add("check", cmd_check, "eigenvalues against every inclusion set")
    eig_opts(p)
    p.add_argument("--tilde", choices=[TILDE_CORRECTED, TILDE_LITERAL], default=TILDE_CORRECTED)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        A = load(args.file)
    except (OSError, TensorFileError, TensorSizeError) as exc:
        print(f"hbounds: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(A, args)
    except InfeasibleRequestError as exc:
        print(f"hbounds: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
