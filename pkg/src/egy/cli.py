"""Command-line front end; every report is JSON (default) or CSV.

Exit codes: 0 success, 2 invalid input, 3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .greedy import greedy_underapprox
from .lemma1 import MODES, lemma1_certificate, nongreedy_two_term_measure
from .measure import cell_decay_bound, chain_check, sample_chain_density
from .partition import Cell, cell_of, cells_in_window, cells_to_csv, next_regular_above
from .rational import format_rational, parse_rational
from .search import ResourceLimitError, best_underapprox


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="egy",
        description="Exact Egyptian-fraction underapproximations, partitions, "
        "and measure certificates.  Rationals are written p/q (or p).",
    )
    parser.add_argument("--json", action="store_true", help="JSON output (default)")
    parser.add_argument("--csv", action="store_true", help="CSV output where supported")
    parser.add_argument(
        "--node-budget", type=int, metavar="N",
        help="solver node budget (default 10^7; env EGY_NODE_BUDGET)",
    )
    parser.add_argument(
        "--threads", type=int, default=1, metavar="T",
        help="accepted for interface compatibility; the reference "
        "implementation is single-threaded and output never depends on T",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("greedy", help="greedy n-term underapproximation")
    p.add_argument("x")
    p.add_argument("n", type=int)

    p = sub.add_parser("best", help="best n-term underapproximation")
    p.add_argument("x")
    p.add_argument("n", type=int)

    p = sub.add_parser("cell", help="partition cell containing x at level n")
    p.add_argument("x")
    p.add_argument("n", type=int)

    p = sub.add_parser("cells", help="cells tiling the window (a, b] at level n")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("n", type=int)
    p.add_argument("--max-cells", type=int, default=10_000)

    p = sub.add_parser("regular", help="regular value >= x within the density bound")
    p.add_argument("x")
    p.add_argument("n", type=int)

    p = sub.add_parser("chain", help="chain (eventually-greedy) check for levels n0..t")
    p.add_argument("x")
    p.add_argument("n0", type=int)
    p.add_argument("t", type=int)

    p = sub.add_parser("lemma1", help="non-greedy measure certificate for slice i")
    p.add_argument("i", type=int)
    p.add_argument("--mode", choices=MODES, default="paper")

    p = sub.add_parser("nongreedy", help="exact non-greedy two-term measure for slice i")
    p.add_argument("i", type=int)

    p = sub.add_parser("decay", help="chain-survivor decay bound for the cell (q, r]")
    p.add_argument("q")
    p.add_argument("r")
    p.add_argument("t", type=int)
    p.add_argument("--imax", type=int, required=True)
    p.add_argument("--slice-bound", choices=("lemma", "exact"), default="lemma")

    p = sub.add_parser("sample", help="sampled chain density over (0, H_s]")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bits", type=int, default=32)

    return parser


def _cell_dict(cell: Cell) -> dict:
    return {
        "level": cell.level,
        "lower": format_rational(cell.lower),
        "upper": "+inf" if cell.upper is None else format_rational(cell.upper),
        "length": None if cell.upper is None else format_rational(cell.upper - cell.lower),
        "best_rep": None if cell.best_rep is None else list(cell.best_rep),
    }


def _run(args: argparse.Namespace) -> tuple[str, str]:
    """Returns (json_text, csv_text); csv falls back to JSON when a command
    has no tabular form."""
    budget = args.node_budget
    if args.command == "greedy":
        rep = greedy_underapprox(parse_rational(args.x), args.n)
        out = {"rep": list(rep), "value": format_rational(rep.value())}
        return json.dumps(out), ""
    if args.command == "best":
        value, rep = best_underapprox(parse_rational(args.x), args.n, budget)
        out = {"value": format_rational(value), "rep": list(rep)}
        return json.dumps(out), ""
    if args.command == "cell":
        cell = cell_of(parse_rational(args.x), args.n, budget)
        return json.dumps(_cell_dict(cell)), ""
    if args.command == "cells":
        cells, uncovered = cells_in_window(
            parse_rational(args.a), parse_rational(args.b), args.n,
            args.max_cells, budget,
        )
        out = {
            "cells": [_cell_dict(c) for c in cells],
            "uncovered": format_rational(uncovered),
        }
        return json.dumps(out), cells_to_csv(cells)
    if args.command == "regular":
        value = next_regular_above(parse_rational(args.x), args.n)
        return json.dumps({"value": format_rational(value)}), ""
    if args.command == "chain":
        report = chain_check(parse_rational(args.x), args.n0, args.t, node_budget=budget)
        return json.dumps(report.to_dict()), ""
    if args.command == "lemma1":
        report = lemma1_certificate(args.i, args.mode)
        return json.dumps(report.to_dict()), ""
    if args.command == "nongreedy":
        from fractions import Fraction

        measure = nongreedy_two_term_measure(args.i)
        interval = Fraction(1, (args.i - 1) * args.i)
        out = {
            "i": args.i,
            "measure": format_rational(measure),
            "interval_length": format_rational(interval),
            "ratio": format_rational(measure / interval),
        }
        return json.dumps(out), ""
    if args.command == "decay":
        cell = Cell(
            level=args.t,
            lower=parse_rational(args.q),
            upper=parse_rational(args.r),
            best_rep=None,
        )
        report = cell_decay_bound(cell, args.imax, args.slice_bound)
        return json.dumps(report.to_dict()), ""
    if args.command == "sample":
        report = sample_chain_density(
            args.s, args.t, args.count, args.seed, args.bits, budget
        )
        return json.dumps(report.to_dict()), report.to_csv()
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    # exact certificates carry rationals far beyond the default 4300-digit
    # int-to-str guard; lifting it is safe (output only, no untrusted parse)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.json and args.csv:
        parser.error("--json and --csv are mutually exclusive")
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be >= 1")
    if args.node_budget is not None and args.node_budget < 1:
        parser.error("--node-budget must be >= 1")
    try:
        json_text, csv_text = _run(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.csv and csv_text:
            sys.stdout.write(csv_text)
        else:
            print(json_text)
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream consumer (head, etc.) closed the pipe; not an error
        import os

        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return 0


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
