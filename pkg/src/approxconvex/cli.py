"""Command line interface: ``approxconvex <command> [options]``.

Commands::

    kappa-table     kappa(n, B) for 2 <= B <= --b-max, 1 <= n <= --n-max
    extreme-tuples  nonincreasing extreme exponent tuples for (--n, --B)
    eval            E at a point given as rationals, with a minimising tuple
    surface         CSV of E(x, y, 1-x-y) on a grid of the 2-simplex
    verify          run a property suite; exit status 1 on any violation
    envelope        convex-minorant certificate for a SampleSet JSON file
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import checks
from .extremal import eval_E, kappa, surface_csv, surface_grid
from .kraft import enumerate_extreme
from .numerics import format_decimal, format_rational, parse_rational
from .stability import OutsideHullError, SampleSet, best_constant_witness, certify

SUITES = ("approx-convex", "concave", "dominance", "sandwich", "best-constant", "all")


def format_table_entry(value: Fraction) -> str:
    """Four decimals, rounded half up; exactly 1 prints as ``1.0`` like the published table."""
    return "1.0" if value == 1 else format_decimal(value, 4)


def kappa_table(b_max: int, n_max: int) -> list[dict]:
    if b_max < 2 or n_max < 1:
        raise ValueError("need b_max >= 2 and n_max >= 1")
    rows = []
    for B in range(2, b_max + 1):
        values = [kappa(n, B) for n in range(1, n_max + 1)]
        rows.append(
            {
                "B": B,
                "exact": [format_rational(v) for v in values],
                "decimal": [format_table_entry(v) for v in values],
            }
        )
    return rows


def _parse_point(tokens: Sequence[str]) -> list[Fraction]:
    parts = [p for tok in tokens for p in tok.replace(",", " ").split()]
    if not parts:
        raise ValueError("empty point")
    return [parse_rational(p) for p in parts]


def _emit(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_kappa_table(args) -> int:
    rows = kappa_table(args.b_max, args.n_max)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["B"] + [str(n) for n in range(1, args.n_max + 1)])
        for row in rows:
            writer.writerow([row["B"]] + row["decimal"])
        _emit(buf.getvalue(), args.out)
    else:
        _emit(_dump({"b_max": args.b_max, "n_max": args.n_max, "rows": rows}), args.out)
    return 0


def cmd_extreme_tuples(args) -> int:
    _emit(_dump(enumerate_extreme(args.n, args.B).to_dict()), args.out)
    return 0


def cmd_eval(args) -> int:
    result = eval_E(_parse_point(args.point), args.B)
    _emit(_dump(result.to_dict()), args.out)
    return 0


def cmd_surface(args) -> int:
    _emit(surface_csv(surface_grid(args.B, args.grid)), args.out)
    return 0


def run_suite(name: str, B: int, n: int, trials: int, seed: int, grid: Optional[int]) -> list[dict]:
    reports = []
    if name in ("approx-convex", "all"):
        r = checks.check_approx_convex(checks.extremal_evaluator(B), B, n, trials, seed)
        reports.append({**r.to_dict(), "passed": r.passed})
    if name in ("concave", "all"):
        r = checks.check_concave(checks.extremal_evaluator(B), n, trials, seed)
        reports.append({**r.to_dict(), "passed": r.passed})
    if name in ("dominance", "all"):
        r = checks.check_dominance(checks.entropy_evaluator(B), B, n, trials, seed)
        reports.append({**r.to_dict(), "passed": r.passed})
    if name in ("sandwich", "all"):
        r = checks.check_sandwich(B, n, trials, seed)
        reports.append({**r.to_dict(), "passed": r.passed})
    if name in ("best-constant", "all"):
        d = grid if grid is not None else 6 * (n + 1)
        r = best_constant_witness(n, B, d)
        reports.append({"suite": f"best-constant[B={B},n={n},grid={d}]", **r.to_dict()})
    return reports


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.B, args.n, args.trials, args.seed, args.grid)
    _emit(_dump({"seed": args.seed, "trials": args.trials, "reports": reports}), args.out)
    return 0 if all(r["passed"] for r in reports) else 1


def cmd_envelope(args) -> int:
    with open(args.input, encoding="utf-8") as fh:
        samples = SampleSet.from_json(fh.read())
    try:
        cert = certify(samples, _parse_point(args.query))
    except OutsideHullError as exc:
        _emit(_dump({"error": "infeasible", "message": str(exc)}), args.out)
        return 2
    _emit(_dump(cert.to_dict()), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=10_000)

    parser = argparse.ArgumentParser(prog="approxconvex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa-table", parents=[common], help="table of kappa(n, B)")
    p.add_argument("--b-max", type=int, default=11)
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_kappa_table)

    p = sub.add_parser("extreme-tuples", parents=[common], help="extreme exponent tuples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--B", type=int, default=2)
    p.set_defaults(func=cmd_extreme_tuples)

    p = sub.add_parser("eval", parents=[common], help="evaluate E at a point")
    p.add_argument("point", nargs="+", help='coordinates, e.g. "1/3 1/3 1/3"')
    p.add_argument("--B", type=int, default=2)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("surface", parents=[common], help="CSV grid of E on the 2-simplex")
    p.add_argument("--B", type=int, default=2)
    p.add_argument("--grid", "--resolution", dest="grid", type=int, default=12)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--B", type=int, default=2)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--grid", type=int, default=None, help="grid denominator for best-constant")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("envelope", parents=[common], help="lower convex envelope at a point")
    p.add_argument("input", help="SampleSet JSON file")
    p.add_argument("--query", nargs="+", required=True)
    p.set_defaults(func=cmd_envelope)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
