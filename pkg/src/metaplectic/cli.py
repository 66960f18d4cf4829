"""Command-line front end.

Subcommands:

* ``epoly``     -- compute one metaplectic polynomial E_mu^{(n,kappa)};
* ``table``     -- recompute the embedded GL_3 reference table and diff it;
* ``check``     -- run a named relation suite (randomized first, symbolic on
                   request) and emit a machine-readable report;
* ``whittaker`` -- compute a Whittaker-type sum with both evaluation paths
                   cross-checked, or its symmetrized companion.

Exit codes: 0 success; 1 generic failure (including table mismatches and
failed checks); 2 support-closure cap exceeded; 3 joint eigenspace not
one-dimensional; 4 normalization failure; 5 weight not dominant.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys

from .daha import BasicRep, GLMetaData, gl_field, metaplectic_polynomial
from .errors import (ClosureCapExceeded, MetaplecticError, NonUniqueEigenvector,
                     NormalizationFailure, NotDominant)
from .fixtures import TABLE_M, TABLE_MU, load_gl3_table
from .render import laurent_to_latex, laurent_to_plain, render_laurent
from .roots import build_root_system
from .suites import SUITE_NAMES, run_suite
from .weyl_action import symmetric_hl, whittaker

EXIT_CAP = 2
EXIT_NONUNIQUE = 3
EXIT_NORMALIZATION = 4
EXIT_NOT_DOMINANT = 5


def _weight(text: str) -> tuple:
    return tuple(int(c) for c in text.split(","))


def _add_common(p):
    p.add_argument("--format", choices=("plain", "json", "latex"),
                   default="plain")
    p.add_argument("--simplify", choices=("none", "content", "gcd"),
                   default="content", help="normalization inside pipelines")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="metaplectic",
        description="exact computer algebra for metaplectic Weyl actions, "
                    "Demazure-Lusztig operators, and GL_r polynomials")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("epoly", help="compute one metaplectic polynomial")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    p.add_argument("--mu", type=_weight, required=True)
    p.add_argument("--cap", type=int, default=5000,
                   help="support-closure cap")
    _add_common(p)

    p = sub.add_parser("table", help="recompute the GL_3 reference table")
    p.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    p.add_argument("--fixtures", default=None,
                   help="override the embedded fixture file")
    _add_common(p)

    p = sub.add_parser("check", help="run a relation suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--type", dest="type_", default=None,
                   help="root system, e.g. B2 (suites on general type)")
    p.add_argument("--r", type=int, default=3, help="rank for the daha suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    p.add_argument("--epsilon-sh", type=int, choices=(1, -1), default=1)
    p.add_argument("--epsilon-lg", type=int, choices=(1, -1), default=1)
    p.add_argument("--degree", type=int, default=2,
                   help="degree bound for the daha suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--symbolic", action="store_true",
                   help="follow the randomized pre-screen with the exact run")

    p = sub.add_parser("whittaker", help="compute a Whittaker-type sum")
    p.add_argument("--type", dest="type_", required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--epsilon-sh", type=int, choices=(1, -1), default=1)
    p.add_argument("--epsilon-lg", type=int, choices=(1, -1), default=1)
    p.add_argument("--lattice", choices=("weight", "root"), default="weight")
    p.add_argument("--lambda", dest="lam", type=_weight, required=True)
    p.add_argument("--symmetric", action="store_true",
                   help="emit the symmetrizer sum instead")
    _add_common(p)
    return ap


def _emit(obj, fmt: str):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(obj)


def cmd_epoly(args) -> int:
    data = GLMetaData(r=args.r, n=args.n, kappa=args.kappa,
                      epsilon=args.epsilon)
    rep = BasicRep(data, field=gl_field(data, simplify=args.simplify))
    try:
        poly = metaplectic_polynomial(rep, args.mu, cap=args.cap)
    except ClosureCapExceeded as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_CAP
    except NonUniqueEigenvector as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_NONUNIQUE
    except NormalizationFailure as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_NORMALIZATION
    _emit(render_laurent(poly, args.format), args.format)
    return 0


def cmd_table(args) -> int:
    fields, reference = load_gl3_table(epsilon=args.epsilon,
                                       path=args.fixtures)
    entries = []
    mismatches = []
    for m in TABLE_M:
        data = GLMetaData(r=3, n=m, epsilon=args.epsilon)
        rep = BasicRep(data, field=fields[m])
        for mu in TABLE_MU:
            poly = metaplectic_polynomial(rep, mu)
            good = poly == reference[(m, mu)]
            entries.append((m, mu, poly, good))
            if not good:
                mismatches.append((m, mu))
    matched = len(entries) - len(mismatches)

    if args.format == "json":
        out = {
            "command": "table",
            "matched": matched,
            "total": len(entries),
            "mismatches": [{"m": m, "mu": list(mu)} for m, mu in mismatches],
            "entries": [{
                "m": m, "mu": list(mu),
                "polynomial": render_laurent(poly, "json"),
                "matches_reference": good,
            } for m, mu, poly, good in entries],
        }
        _emit(out, "json")
    elif args.format == "latex":
        print(r"\begin{longtable}{ll}")
        for m, mu, poly, good in entries:
            mu_s = ",".join(str(c) for c in mu)
            print(r"$E_{(%s)}^{(%d)}$ & $%s$ \\" %
                  (mu_s, m, laurent_to_latex(poly)))
        print(r"\end{longtable}")
        if mismatches:
            print("% mismatches: " + "; ".join(
                f"m={m} mu={mu}" for m, mu in mismatches))
        print(f"% {matched}/{len(entries)} entries match")
    else:
        for m, mu, poly, good in entries:
            flag = "" if good else "   <-- MISMATCH vs reference"
            mu_s = ",".join(str(c) for c in mu)
            print(f"E[m={m}, mu=({mu_s})] = "
                  f"{laurent_to_plain(poly)}{flag}")
        print(f"{matched}/{len(entries)} entries match")
        for m, mu in mismatches:
            print(f"mismatch at m={m}, mu={mu}")
    return 0 if not mismatches else 1


def cmd_check(args) -> int:
    kwargs = {"n": args.n, "kappa": args.kappa}
    if args.suite == "daha":
        kwargs.update(r=args.r, degree=args.degree, epsilon=args.epsilon)
    else:
        if not args.type_:
            print("error: --type is required for this suite",
                  file=_sys.stderr)
            return 1
        kwargs.update(spec=args.type_, epsilon_sh=args.epsilon_sh,
                      epsilon_lg=args.epsilon_lg)
    runs = [run_suite(args.suite, mode="random", seed=args.seed, **kwargs)]
    if runs[0].ok and args.symbolic:
        runs.append(run_suite(args.suite, mode="symbolic", seed=args.seed,
                              **kwargs))
    report = {
        "command": "check",
        "ok": all(r.ok for r in runs),
        "runs": [r.to_json() for r in runs],
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["ok"] else 1


def cmd_whittaker(args) -> int:
    sys_ = build_root_system(args.type_, n=args.n, kappa=args.kappa,
                             lattice=args.lattice,
                             epsilon_sh=args.epsilon_sh,
                             epsilon_lg=args.epsilon_lg,
                             simplify=args.simplify)
    try:
        if args.symmetric:
            poly = symmetric_hl(sys_, args.lam)
        else:
            poly = whittaker(sys_, args.lam)
    except NotDominant as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_NOT_DOMINANT
    _emit(render_laurent(poly, args.format), args.format)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "epoly":
            return cmd_epoly(args)
        if args.command == "table":
            return cmd_table(args)
        if args.command == "check":
            return cmd_check(args)
        if args.command == "whittaker":
            return cmd_whittaker(args)
    except MetaplecticError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    raise SystemExit(main())
