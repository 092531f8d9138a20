"""Command line front end: ``levy-laplace {density,transform,correlate,verify,catalog}``.

Exit codes: 0 success, 1 evaluation or verification failure, 2 usage error,
3 infrastructure error (I/O, unexpected exceptions).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .density import RationalOrder, density
from .errors import DomainError, LevyLaplaceError
from .identities import CorrelationParams, correlation_F, j_integral
from .report import SCHEMA_VERSION, VerificationReport
from .suites import SUITES, run_suite
from .transforms import CATALOG, bar_transform, get_pair, tilde_transform

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFRA = 0, 1, 2, 3
MAX_GRID = 1_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep our message format
        raise UsageError(message)


@dataclass
class Table:
    columns: list[str]
    rows: list[list[Any]] = field(default_factory=list)
    reports: list[VerificationReport] | None = None


# ------------------------------------------------------------------ parsing

def parse_alpha(text: str) -> RationalOrder:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            order = RationalOrder.from_fraction(text)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return order


def parse_grid(text: str) -> np.ndarray:
    """``start:stop:count[:log|lin]``; logarithmic spacing by default."""
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise UsageError(f"grid must be start:stop:count[:log|lin], got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"cannot parse grid {text!r}") from None
    spacing = parts[3] if len(parts) == 4 else "log"
    if not 1 <= count <= MAX_GRID:
        raise UsageError(f"grid count must be in [1, {MAX_GRID}]")
    if not (start > 0 and stop > 0):
        raise UsageError("grid endpoints must be positive")
    if spacing == "log":
        return np.geomspace(start, stop, count)
    if spacing == "lin":
        return np.linspace(start, stop, count)
    raise UsageError(f"grid spacing must be 'log' or 'lin', got {spacing!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--output", help="write to this file instead of stdout")

    parser = _Parser(prog="levy-laplace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("density", parents=[common], help="tabulate g_alpha on a grid")
    p.add_argument("--alpha", required=True)
    p.add_argument("--grid", required=True)

    p = sub.add_parser("transform", parents=[common], help="tilde/bar transform of a catalog function")
    p.add_argument("--kind", choices=("tilde", "bar"), required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--f", dest="f", required=True)
    p.add_argument("--grid", required=True)

    p = sub.add_parser("correlate", parents=[common],
                       help="J_{alpha,beta}(x, y) on an x grid, or F_{alpha,beta}(p, y) with --laplace")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--y", type=float, default=1.0)
    p.add_argument("--grid", required=True)
    p.add_argument("--laplace", action="store_true", help="grid is over p; emit the closed form F")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--tol", type=float, default=None)

    sub.add_parser("catalog", parents=[common], help="list the catalog of Laplace pairs")
    return parser


# ------------------------------------------------------------------ commands

def run_density(args) -> Table:
    order = parse_alpha(args.alpha)
    xs = parse_grid(args.grid)
    values = np.atleast_1d(density(order, xs))
    return Table(["x", "g"], [[float(x), float(v)] for x, v in zip(xs, values)])


def run_transform(args) -> Table:
    order = parse_alpha(args.alpha)
    xs = parse_grid(args.grid)
    try:
        pair = get_pair(args.f)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    fn = tilde_transform if args.kind == "tilde" else bar_transform
    values = np.atleast_1d(fn(pair, order, xs))
    return Table(["x", "value"], [[float(x), float(v)] for x, v in zip(xs, values)])


def run_correlate(args) -> Table:
    params = CorrelationParams(parse_alpha(args.alpha), parse_alpha(args.beta))
    grid = parse_grid(args.grid)
    if args.y < 0 or (not args.laplace and args.y == 0):
        raise UsageError("y must be positive")
    if args.laplace:
        values = np.atleast_1d(correlation_F(params, grid, args.y))
        return Table(["p", "F"], [[float(p), float(v)] for p, v in zip(grid, values)])
    values = np.atleast_1d(j_integral(params.alpha, params.beta, grid, args.y))
    return Table(["x", "J"], [[float(x), float(v)] for x, v in zip(grid, values)])


def run_verify(args) -> Table:
    if args.tol is not None and not args.tol > 0:
        raise UsageError("--tol must be positive")
    reports = run_suite(args.suite, args.tol)
    rows = [[r.identity, json.dumps(r.params, sort_keys=True), r.observed_error, r.tolerance, r.passed]
            for r in reports]
    return Table(["identity", "params", "observed_error", "tolerance", "pass"], rows, reports)


def run_catalog(args) -> Table:
    return Table(["name", "description"], [[p.name, p.description] for p in CATALOG.values()])


COMMANDS = {
    "density": run_density,
    "transform": run_transform,
    "correlate": run_correlate,
    "verify": run_verify,
    "catalog": run_catalog,
}


# ------------------------------------------------------------------ output

def _cell(value: Any) -> str:
    # repr of a float is the shortest string that round-trips (at most 17 digits)
    return repr(value) if isinstance(value, float) else str(value)


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        if table.reports is not None:
            rows = [r.to_dict() for r in table.reports]
        else:
            rows = [dict(zip(table.columns, row)) for row in table.rows]
        return json.dumps({"schema": SCHEMA_VERSION, "rows": rows}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.columns)
        writer.writerows([[_cell(c) for c in row] for row in table.rows])
        return buf.getvalue()
    cells = [[f"{c:.10g}" if isinstance(c, float) else str(c) for c in row] for row in table.rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(table.columns)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(table.columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in cells]
    if table.reports is not None:
        passed = sum(r.passed for r in table.reports)
        lines.append(f"{passed}/{len(table.reports)} checks passed")
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        table = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LevyLaplaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except Exception as exc:  # anything else is an infrastructure fault
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INFRA

    text = render(table, args.format)
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"error writing output: {exc}", file=sys.stderr)
        return EXIT_INFRA

    if table.reports is not None and not all(r.passed for r in table.reports):
        return EXIT_FAIL
    return EXIT_OK
