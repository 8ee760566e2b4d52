"""Command-line front door.

Subcommands:
  char    compute a character by one route or all of them
  dim     evaluate the character at x = y = 1
  schur   expand a composite supersymmetric S-function
  verify  run the identity suites and report failures

Exit codes: 0 success, 1 input error (the message names the violated
hypothesis), 2 route disagreement under `char --method all`.  JSON
output is canonical: identical inputs give byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .combinatorics import CompositePartition
from .jacobi_trudi import character, dimension, jt_matrix, jt_matrix_labels
from .symfunc import SymFuncContext
from .verify import GridSpec, run_suite
from .weights import Weight, normalize_to_special

ROUTES = ("jt", "suzhang", "typical", "reduction")


class _Parser(argparse.ArgumentParser):
    """Argument errors are input errors (exit 1), not argparse's exit 2."""

    def error(self, message):
        raise ValueError(message)


def _canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _effective_cap(args):
    env = os.environ.get("SUPERSCHUR_CAP")
    if env is not None:
        return int(env)
    return args.cap


def _parse_weight(args):
    w = Weight.parse(args.m, args.n, args.weight)
    return w.require_dominant()


def _matrix_payload(w):
    """Labels and expanded entries of the determinant matrix for w."""
    _, sc = normalize_to_special(w)
    labels = jt_matrix_labels(sc)
    entries = jt_matrix(sc)
    defs = {}
    for lrow, erow in zip(labels, entries):
        for label, entry in zip(lrow, erow):
            defs.setdefault(label, entry)
    return labels, defs


def cmd_char(args):
    w = _parse_weight(args)
    cap = _effective_cap(args)
    if args.method == "all":
        routes = {}
        for name in ROUTES:
            try:
                routes[name] = character(w, name, cap)
            except ValueError:
                routes[name] = None
        computed = [p for p in routes.values() if p is not None]
        if not computed:
            raise ValueError(f"no route applies to {w}")
        agree = all(p == computed[0] for p in computed)
        if args.format == "json":
            payload = {
                "weight": str(w),
                "routes": {name: (p.to_json_dict() if p is not None else "n/a")
                           for name, p in routes.items()},
                "agree": agree,
            }
            print(_canonical(payload))
        else:
            for name in ROUTES:
                p = routes[name]
                print(f"{name}: {p if p is not None else 'n/a'}")
            print(f"agree: {'yes' if agree else 'NO'}")
        return 0 if agree else 2

    poly = character(w, args.method, cap)
    if args.emit_matrix:
        labels, defs = _matrix_payload(w)
        if args.format == "json":
            payload = {
                "weight": str(w),
                "method": args.method,
                "matrix": labels,
                "entries": {k: v.to_json_dict() for k, v in defs.items()},
                "character": poly.to_json_dict(),
            }
            print(_canonical(payload))
        else:
            print("matrix:")
            for row in labels:
                print("  " + " ".join(row))
            print("entries:")
            for label in sorted(defs, key=lambda s: (s.split("_")[0],
                                                     int(s.split("_")[1]))):
                print(f"  {label} = {defs[label]}")
            print("character:")
            print(poly)
        return 0
    if args.format == "json":
        payload = {"weight": str(w), "method": args.method,
                   "character": poly.to_json_dict()}
        print(_canonical(payload))
    else:
        print(poly)
    return 0


def cmd_dim(args):
    w = _parse_weight(args)
    print(dimension(w, args.method, _effective_cap(args)))
    return 0


def cmd_schur(args):
    c = CompositePartition.parse(args.composite)
    if not c.is_super_standard(args.m, args.n):
        raise ValueError(
            f"nu_{{m - l(mu) + 1}} <= n violated for {c} on "
            f"gl({args.m}|{args.n})")
    if not c.is_standard(args.m):
        raise ValueError(
            f"l(nu) + l(mu) <= m violated for {c} on gl({args.m}|{args.n})")
    poly = SymFuncContext(args.m, args.n).composite_super_schur(c)
    if args.format == "json":
        print(_canonical(poly.to_json_dict()))
    else:
        print(poly)
    return 0


def cmd_verify(args):
    grid = GridSpec.parse(args.grid) if args.grid else None
    reports = run_suite(args.suite, grid, args.seed)
    out = reports[0] if len(reports) == 1 else reports
    print(_canonical(out))
    return 0 if all(not r["failures"] for r in reports) else 1


def _add_weight_flags(sub):
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--weight", required=True,
                     help="'l1,...,lm;u1,...,un', e.g. '3,2,-1;-1,-1'")
    sub.add_argument("--cap", type=int, default=None,
                     help="guard on m!*n! (env SUPERSCHUR_CAP overrides)")


def build_parser():
    parser = _Parser(prog="superschur",
                     description="Exact gl(m|n) irreducible characters.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_char = subs.add_parser("char", help="compute a character")
    _add_weight_flags(p_char)
    p_char.add_argument("--method", default="jt",
                        choices=ROUTES + ("all",))
    p_char.add_argument("--format", default="text", choices=("text", "json"))
    p_char.add_argument("--emit-matrix", action="store_true",
                        help="also print the determinant matrix")
    p_char.set_defaults(func=cmd_char)

    p_dim = subs.add_parser("dim", help="compute a dimension")
    _add_weight_flags(p_dim)
    p_dim.add_argument("--method", default="jt", choices=ROUTES)
    p_dim.set_defaults(func=cmd_dim)

    p_schur = subs.add_parser("schur",
                              help="expand a composite S-function")
    p_schur.add_argument("--m", type=int, required=True)
    p_schur.add_argument("--n", type=int, required=True)
    p_schur.add_argument("--composite", required=True,
                         help="'nu|mu', e.g. '2,1|3'")
    p_schur.add_argument("--format", default="text",
                         choices=("text", "json"))
    p_schur.set_defaults(func=cmd_schur)

    p_verify = subs.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", default="all",
                          choices=("rho", "split-classical", "split-super",
                                   "isolate-y", "jt-vs-oracle",
                                   "raise-oracle", "phi-roundtrip", "all"))
    p_verify.add_argument("--grid", default=None,
                          help="'m<=A,n<=B,entry<=C'")
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
