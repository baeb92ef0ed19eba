"""Command-line interface.  Every subcommand prints one JSON report on stdout.

Exit codes: 0 success, 1 internal inconsistency detected, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .characters import dim_weyl
from .errors import BudgetExceeded, InvalidParameterError, RankMismatchError, WeylprimError
from .jantzen import is_weyl_simple
from .roots import RootSum, Weight, subtract_rootsum
from .tableaux import coherent_shape, enumerate_standard
from .theorems import (
    search,
    theorem_a,
    theorem_b_condition,
    theorem_b_consistency,
    verify_embedding,
)
from .weyl import Budget, get_module


class UsageError(WeylprimError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _weight(args, n: int) -> Weight:
    w = Weight.parse(args.weight)
    if w.rank != n - 1:
        raise RankMismatchError(f"--weight has {w.rank} coordinates, SL_{n} needs {n - 1}")
    return w


def _q(args, n: int) -> int:
    if args.q not in (1, n - 1):
        raise InvalidParameterError(f"--q must be 1 or {n - 1}")
    return args.q


def cmd_simple_check(args):
    w = _weight(args, args.n)
    return is_weyl_simple(w, args.p).to_dict(), 0


def cmd_dim(args):
    return {"dimension": dim_weyl(_weight(args, args.n))}, 0


def cmd_tableaux(args):
    kappa = Weight.parse(args.kappa) if args.kappa else Weight(())
    if kappa.rank != args.n - 2:
        raise RankMismatchError(f"--kappa needs {args.n - 2} coordinates")
    shape = coherent_shape(kappa, first=2)
    tabs = enumerate_standard(shape)
    out = {"shape": list(shape.lam), "count": len(tabs)}
    if args.list:
        out["tableaux"] = [t.to_list() for t in tabs]
    return out, 0


def cmd_theorem_a(args):
    w = _weight(args, args.n)
    rep = theorem_a(w, args.p, args.k, _q(args, args.n))
    return rep.to_dict(), 0


def cmd_theorem_b(args):
    w = _weight(args, args.n)
    q = _q(args, args.n)
    budget = Budget(args.budget)
    cons = theorem_b_consistency(w, args.p, args.k, q, budget)
    cond = theorem_b_condition(w, args.p, args.k, q, budget)
    out = cons.to_dict()
    out["condition_detail"] = cond.to_dict()
    return out, (1 if cons.consistent is False else 0)


def cmd_verify(args):
    w = _weight(args, args.n)
    q = _q(args, args.n)
    emb = verify_embedding(w, args.p, args.k, q, Budget(args.budget))
    rep = theorem_a(w, args.p, args.k, q)
    out = emb.to_dict()
    out["theorem_a_applies"] = rep.applies
    bad = rep.applies and emb.is_weyl is False
    return out, (1 if bad else 0)


def cmd_primitives(args):
    w = _weight(args, args.n)
    drop = RootSum.parse(args.mu_drop)
    if drop.rank != args.n - 1:
        raise RankMismatchError(f"--mu-drop needs {args.n - 1} coordinates")
    omit = {int(x) for x in args.omit.split(",") if x} if args.omit else set()
    mod = get_module(w, Budget(args.budget))
    try:
        if args.weyl:
            vecs = mod.weyl_primitive_vectors(drop.coeffs, args.p, omit)
        else:
            vecs = mod.primitive_vectors(drop.coeffs, args.p, omit)
        model = mod.weight_space(drop.coeffs, args.p)
    except BudgetExceeded:
        return {"drop": str(drop), "status": "SKIPPED"}, 0
    return {
        "weight": list(subtract_rootsum(w, drop).coords),
        "drop": str(drop),
        "module": "Delta" if args.weyl else "L",
        "weyl_dim": model.dim,
        "simple_dim": model.simple_dim,
        "basis_size": len(vecs),
    }, 0


def cmd_search(args):
    recs = search(args.n, args.p, args.max_coord, args.k_max, args.budget, args.q)
    bad = any(r.inconsistent for r in recs)
    return [r.to_dict() for r in recs], (1 if bad else 0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weylprim", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, *flags):
        sp = sub.add_parser(name, parents=[common])
        sp.set_defaults(func=func)
        for flag in flags:
            flag(sp)
        return sp

    def n(sp):
        sp.add_argument("--n", type=int, required=True)

    def p(sp):
        sp.add_argument("--p", type=int, required=True)

    def weight(sp):
        sp.add_argument("--weight", required=True, help="a1,a2,... in fundamental weights")

    def kq(sp):
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--q", type=int, default=1)

    def budget(sp):
        sp.add_argument("--budget", type=int, default=None, help="lattice vector cap (default $WEYLPRIM_BUDGET or 1e6)")

    add("simple-check", cmd_simple_check, n, p, weight)
    add("dim", cmd_dim, n, weight)
    sp = add("tableaux", cmd_tableaux, n)
    sp.add_argument("--kappa", default="", help="d2,d3,... of the G^(1) weight")
    sp.add_argument("--list", action="store_true")
    add("theorem-a", cmd_theorem_a, n, p, weight, kq)
    add("theorem-b", cmd_theorem_b, n, p, weight, kq, budget)
    add("verify", cmd_verify, n, p, weight, kq, budget)
    sp = add("primitives", cmd_primitives, n, p, weight, budget)
    sp.add_argument("--mu-drop", required=True, help="b1,b2,... with mu = omega - sum b_i alpha_i")
    sp.add_argument("--omit", default="", help="simple indices to leave out, e.g. 1")
    sp.add_argument("--weyl", action="store_true", help="primitive vectors of Delta(omega) instead of L(omega)")
    sp = add("search", cmd_search, n, p, budget)
    sp.add_argument("--max-coord", type=int, required=True)
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--q", type=int, default=1)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "command", "json", "pretty"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _pretty(report: dict) -> str:
    lines = [f"{report['command']}  (weylprim {report['version']})"]
    for k, v in report["inputs"].items():
        lines.append(f"  {k:>10}: {v}")
    result = report["result"]
    rows = result if isinstance(result, list) else [result]
    for row in rows:
        lines.append("-" * 40)
        for k, v in row.items():
            lines.append(f"  {k:>22}: {json.dumps(v)}")
    return "\n".join(lines)


def parse_and_dispatch(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    command = None
    try:
        args = parser.parse_args(argv)
        command = args.command
        if command is None:
            raise UsageError("missing subcommand")
        result, code = args.func(args)
    except WeylprimError as exc:
        if isinstance(exc, UsageError):
            parser.print_usage(err)
        print(f"error: {exc}", file=err)
        report = {"command": command, "error": {"code": exc.code, "message": str(exc)}, "version": __version__}
        print(json.dumps(report), file=out)
        return 2
    report = {"command": command, "inputs": _inputs(args), "result": result, "version": __version__}
    if args.pretty:
        print(_pretty(report), file=out)
    else:
        print(json.dumps(report), file=out)
    return code


def main(argv=None) -> None:
    sys.exit(parse_and_dispatch(argv))


if __name__ == "__main__":
    main()
