"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 ``solve``
found no optional solution.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import algebra, classic, decision, laws
from .errors import SoftSetError
from .workspace import Workspace, css_to_doc, dumps, parse_workspace, serialize_workspace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NO_SOLUTION = 3

_CLASSIC_KIND = {
    "molodtsov": "union",
    "natural-union": "union",
    "breve": "union",
    "natural-intersect": "intersect",
    "hat": "intersect",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _load(path: str) -> Workspace:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_workspace(data)


def _target(ws: Workspace, args) -> algebra.CentralSoftSet:
    if args.set is not None:
        return ws.get_set(args.set)
    return decision.system_join(ws.get_system(args.system))


def cmd_op(args, out) -> int:
    ws = _load(args.file)
    lhs = ws.get_set(args.lhs)
    if args.operation != "complement" and args.rhs is None:
        raise UsageError(f"op {args.operation} needs --rhs")

    if args.classic:
        kind = _CLASSIC_KIND[args.classic]
        if args.operation != kind:
            raise UsageError(f"--classic {args.classic} is an {kind} operation, not {args.operation}")
        F = classic.from_central(lhs)
        G = classic.from_central(ws.get_set(args.rhs))
        result = classic.apply(args.classic, F, G)
        ctx = ws.context
        doc = {
            "map": {p: list(ctx.objects(x)) for p, x in zip(ctx.parameters, result.images) if x},
            "support": list(ctx.params(result.support)),
        }
        out.write(dumps(doc))
        return EXIT_OK

    if args.operation == "complement":
        result = algebra.complement(lhs)
    else:
        rhs = ws.get_set(args.rhs)
        op = {"union": algebra.union, "intersect": algebra.intersection, "diff": algebra.difference}
        result = op[args.operation](lhs, rhs)

    if args.out:
        ws.sets[args.name] = result
        Path(args.out).write_bytes(serialize_workspace(ws))
    else:
        out.write(dumps(css_to_doc(result)))
    return EXIT_OK


def cmd_project(args, out) -> int:
    ws = _load(args.file)
    params = [p for p in args.params.split(",") if p]
    result = algebra.project(ws.get_set(args.set), params)
    out.write(dumps(css_to_doc(result)))
    return EXIT_OK


def cmd_order(args, out) -> int:
    ws = _load(args.file)
    verdict = algebra.leq(ws.get_set(args.lhs), ws.get_set(args.rhs))
    out.write(f"{args.lhs} ⊑ {args.rhs}: {'true' if verdict else 'false'}\n")
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    ws = _load(args.file)
    out.write(decision.render_matrix(decision.incidence_matrix(_target(ws, args))))
    return EXIT_OK


def cmd_solve(args, out) -> int:
    ws = _load(args.file)
    target = _target(ws, args)
    report = decision.optional_solutions(target)
    out.write(report.render())
    perfect = decision.perfect_solutions(target)
    out.write("perfect: " + (" ".join(ws.context.objects(perfect)) or "none") + "\n")
    if args.oracle:
        found = decision.oracle_optional(target)
        out.write("oracle: " + (" ".join(ws.context.objects(found)) or "none") + "\n")
    return EXIT_OK if report.winners else EXIT_NO_SOLUTION


def cmd_verify(args, out) -> int:
    if args.universe < 0 or args.params < 0:
        raise UsageError("--universe and --params must be non-negative")
    context = laws.small_context(args.universe, args.params)
    ids = list(laws.LAWS) if args.laws == "all" else [x for x in args.laws.split(",") if x]
    if args.exhaustive:
        kwargs = {"mode": "exhaustive"}
    else:
        kwargs = {"mode": "sampled", "count": args.samples, "seed": args.seed}
    reports = laws.check_all(context, ids, **kwargs)
    if args.json:
        out.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    else:
        out.write(laws.render_reports(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="centralsoft", description="Central soft set algebra and decision tool.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("op", help="apply a set operation")
    p.add_argument("operation", choices=["union", "intersect", "complement", "diff"])
    p.add_argument("--file", required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs")
    p.add_argument("--out", help="write the workspace with the result added")
    p.add_argument("--name", default="result", help="name of the result set in --out")
    p.add_argument("--classic", choices=sorted(_CLASSIC_KIND))
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("project", help="restrict a central set")
    p.add_argument("--file", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--params", required=True, help="comma-separated parameter names")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("order", help="decide the information order")
    p.add_argument("--file", required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(func=cmd_order)

    for name, func in (("matrix", cmd_matrix), ("solve", cmd_solve)):
        p = sub.add_parser(name)
        p.add_argument("--file", required=True)
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--set")
        group.add_argument("--system")
        if name == "solve":
            p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check the algebraic laws")
    p.add_argument("--universe", type=int, required=True)
    p.add_argument("--params", type=int, required=True)
    p.add_argument("--laws", default="all")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_verify)
    return parser


def run_command(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SoftSetError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
