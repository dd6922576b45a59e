"""Command-line front end.

Subcommands: eval, series, coeffs, greens, tabulate, verify.  Exact
quantities (series coefficients, identity sides) are always emitted as
"p/q" rational strings; floats only appear for evaluated specials and
carry 17 significant digits so records round-trip exactly.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import __version__
from .combinatorics import CoeffTable, rational_str
from .errors import MelonTFTError
from .greens import PointTuple, connected_2k
from .series import perturbative_order
from .specialfn import Coupling, Point3, g2_exact, g_shift, sde_residual_algebraic
from .verify import run_suites

__all__ = ["main", "entry_point", "build_parser"]


def _parse_point(text: str) -> Point3:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected x as 'x1,x2,x3', got {text!r}")
    return Point3(*(float(p) for p in parts))


def _parse_floats(text: str) -> List[float]:
    return [float(p) for p in text.split(",") if p != ""]


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: List[str], rows: List[List[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _eval_record(lam: float, x: Point3) -> dict:
    c = Coupling(lam)
    return {
        "lambda": lam,
        "x": [x.x1, x.x2, x.x3],
        "g": g_shift(x.x1, c),
        "G2": g2_exact(x, c),
        "residual_algebraic": sde_residual_algebraic(x.x1, c),
    }


def cmd_eval(args) -> int:
    rec = _eval_record(args.lam, _parse_point(args.x))
    if args.format == "json":
        _emit(json.dumps(rec) + "\n", args.output)
    else:
        header = ["lambda", "x1", "x2", "x3", "g", "G2", "residual_algebraic"]
        row = [_fmt(rec["lambda"]), *(_fmt(v) for v in rec["x"]), _fmt(rec["g"]), _fmt(rec["G2"]), _fmt(rec["residual_algebraic"])]
        _emit(_csv_text(header, [row]), args.output)
    return 0


def cmd_series(args) -> int:
    s = perturbative_order(args.order)
    if args.format == "json":
        payload = {
            "order": s.order,
            "prefactor_pi_over_2_pow": s.order,
            "terms": [
                {
                    "coeff": rational_str(t.coeff),
                    "logpow": t.logpow,
                    "x1pow": t.x1pow,
                    "fullpow": t.fullpow,
                }
                for t in s.terms
            ],
        }
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        rows = [
            [str(s.order), rational_str(t.coeff), str(t.logpow), str(t.x1pow), str(t.fullpow)]
            for t in s.terms
        ]
        _emit(_csv_text(["order", "coeff", "logpow", "x1pow", "fullpow"], rows), args.output)
    return 0


def cmd_coeffs(args) -> int:
    if args.source == "closed":
        table = CoeffTable.from_closed_form(args.max_order)
    else:
        table = CoeffTable.from_recurrences(args.max_order)
    items = sorted(table.entries.items())
    if args.format == "json":
        payload = {
            "max_order": table.max_order,
            "source": args.source,
            "entries": [
                {"n": n, "k": k, "m": m, "a": rational_str(v)} for (n, k, m), v in items
            ],
        }
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        rows = [[str(n), str(k), str(m), rational_str(v)] for (n, k, m), v in items]
        _emit(_csv_text(["n", "k", "m", "a"], rows), args.output)
    return 0


def cmd_greens(args) -> int:
    points = tuple(_parse_point(p) for p in args.points.split(";") if p)
    value = connected_2k(PointTuple(points), Coupling(args.lam))
    payload = {"k": len(points), "lambda": args.lam, "value": value}
    if args.format == "json":
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        _emit(
            _csv_text(["k", "lambda", "value"], [[str(len(points)), _fmt(args.lam), _fmt(value)]]),
            args.output,
        )
    return 0


def cmd_tabulate(args) -> int:
    lams = _parse_floats(args.lam)
    x1s = _parse_floats(args.x1)
    if not lams or not x1s:
        raise ValueError("tabulate needs nonempty --lambda and --x1 grids")
    records = []
    for lam in lams:  # coupling-major row order
        for x1 in x1s:
            records.append(_eval_record(lam, Point3(x1, args.x2, args.x3)))
    if args.format == "json":
        _emit(json.dumps(records) + "\n", args.output)
    else:
        header = ["lambda", "x1", "x2", "x3", "G2", "g", "residual"]
        rows = [
            [
                _fmt(r["lambda"]),
                _fmt(r["x"][0]),
                _fmt(r["x"][1]),
                _fmt(r["x"][2]),
                _fmt(r["G2"]),
                _fmt(r["g"]),
                _fmt(r["residual_algebraic"]),
            ]
            for r in records
        ]
        _emit(_csv_text(header, rows), args.output)
    return 0


def cmd_verify(args) -> int:
    names = (
        ["coeffs", "identities", "lambert", "sde", "greens"]
        if args.suite == "all"
        else [args.suite]
    )
    numeric = args.numeric or args.suite == "all"
    x = _parse_point(args.x) if args.x else None
    checks = run_suites(
        names,
        max_order=args.max_order,
        max_n=args.max_n,
        lam=args.lam,
        x=x,
        tol=args.tol,
        numeric=numeric,
    )
    if args.format == "json":
        payload = [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ]
        _emit(json.dumps(payload) + "\n", args.output)
    else:
        _emit("".join(c.line() + "\n" for c in checks), args.output)
    failed = [c for c in checks if c.passed is False]
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="melontft",
        description="Exact melonic tensor-field-theory 2-point function: "
        "evaluation, series data and verification suites.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")

    p = sub.add_parser("eval", help="evaluate the exact 2-point function")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--x", required=True, help="momentum as 'x1,x2,x3'")
    add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="emit one exact perturbative order")
    p.add_argument("--order", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("coeffs", help="emit the exact coefficient table")
    p.add_argument("--max-order", type=int, default=9)
    p.add_argument("--source", choices=("closed", "recur"), default="closed")
    add_common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("greens", help="evaluate a connected 2k-point function")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--points", required=True, help="semicolon-separated points 'x1,x2,x3;...'")
    add_common(p)
    p.set_defaults(func=cmd_greens)

    p = sub.add_parser("tabulate", help="tabulate G2 over coupling/x1 grids")
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated couplings")
    p.add_argument("--x1", required=True, help="comma-separated x1 values")
    p.add_argument("--x2", type=float, default=0.0)
    p.add_argument("--x3", type=float, default=0.0)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_tabulate)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=("coeffs", "identities", "sde", "lambert", "greens", "all"))
    p.add_argument("--max-order", type=int, default=9)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--lambda", dest="lam", type=float, default=None)
    p.add_argument("--x", default=None, help="momentum as 'x1,x2,x3'")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--numeric", action="store_true", help="include quadrature-based SDE checks")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, MelonTFTError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())
