"""Command-line driver.

Exit codes: 0 success, 1 verification or golden-table failure, 2 bad
input, 3 weight-search exhaustion.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .bases import BasisFamily, BasisSpec, eval_basis_row
from .errors import DomainError, SearchExhaustedError
from .experiments import (
    DEFAULT_SEED,
    ExperimentConfig,
    check_goldens,
    render_report,
    run_table_1_2,
    run_table_3_4,
    verify_orderings,
)
from .render import fraction_str, parse_fraction

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_SEARCH_EXHAUSTED = 3

_FAMILY_NAMES = {f.value: f for f in BasisFamily}


def _default_seed() -> int:
    env = os.environ.get("TPB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"TPB_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise DomainError(f"expected a comma-separated integer list, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpbases",
        description="Exact conditioning experiments for totally positive "
                    "polynomial bases and their Kronecker products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tables = sub.add_parser("tables", help="reproduce the report tables")
    tables.add_argument("--which", default="1,2,3,4",
                        help="comma-separated table numbers (subset of 1,2,3,4)")
    tables.add_argument("--degrees", default="3,4,5")
    tables.add_argument("--seed", type=int, default=None)
    tables.add_argument("--max-iter", type=int, default=None)
    tables.add_argument("--format", choices=("md", "csv", "json"), default="md")
    tables.add_argument("--out", default=None)
    tables.add_argument("--full", action="store_true",
                        help="also emit the B2_T spectral columns in table 3")

    verify = sub.add_parser("verify", help="verify the optimality properties")
    verify.add_argument("--part", choices=("i", "ii", "iii", "all"),
                        default="all")
    verify.add_argument("--degrees", default="3,4,5")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--max-iter", type=int, default=None)
    verify.add_argument("--format", choices=("md", "csv", "json"), default="md")
    verify.add_argument("--out", default=None)

    ev = sub.add_parser("eval", help="evaluate one basis row at a point")
    ev.add_argument("--family", required=True, choices=sorted(_FAMILY_NAMES))
    ev.add_argument("--degree", type=int, required=True)
    ev.add_argument("--x", required=True, help="rational point, e.g. 1/5")
    ev.add_argument("--weights", default=None,
                    help="comma-separated positive rational weights")
    return parser


def _make_config(args, which=()) -> ExperimentConfig:
    kwargs = {
        "degrees": _parse_int_list(args.degrees),
        "seed": args.seed if args.seed is not None else _default_seed(),
    }
    if getattr(args, "max_iter", None) is not None:
        kwargs["max_iter"] = args.max_iter
    if getattr(args, "full", False):
        kwargs["full"] = True
    try:
        return ExperimentConfig(**kwargs)
    except ValueError as exc:
        raise DomainError(str(exc))


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_tables(args) -> int:
    which = set(_parse_int_list(args.which))
    if not which or not which.issubset({1, 2, 3, 4}):
        raise DomainError(f"--which must be a subset of 1,2,3,4, got {args.which!r}")
    config = _make_config(args)
    rows = []
    weights = None
    dp_variant = "unity-corrected"
    if which & {1, 2}:
        plain_rows, dp_variant = run_table_1_2(config)
        rows.extend(r for r in plain_rows if r.table in which)
    if which & {3, 4}:
        rational_rows, weights = run_table_3_4(config)
        rows.extend(r for r in rational_rows if r.table in which)
    _emit(render_report(rows, [], args.format, config,
                        weights=weights, dp_variant=dp_variant), args.out)
    mismatches = check_goldens(rows)
    for row, expected in mismatches:
        print(f"golden mismatch: table {row.table} n={row.degree} "
              f"{row.family_label} {row.metric}: got {row.decimal}, "
              f"expected {expected}", file=sys.stderr)
    return EXIT_VERIFICATION_FAILED if mismatches else EXIT_OK


def _cmd_verify(args) -> int:
    parts = ("i", "ii", "iii") if args.part == "all" else (args.part,)
    config = _make_config(args)
    verdicts = verify_orderings(config, parts=parts)
    _emit(render_report([], verdicts, args.format, config), args.out)
    failures = [v for v in verdicts if v.holds is not True]
    for v in failures:
        state = "indeterminate" if v.holds is None else "FALSE"
        print(f"verdict {state}: {v.part} n={v.degree} {v.pair} "
              f"({v.variant})", file=sys.stderr)
    return EXIT_VERIFICATION_FAILED if failures else EXIT_OK


def _cmd_eval(args) -> int:
    weights = None
    if args.weights is not None:
        weights = tuple(parse_fraction(w) for w in args.weights.split(","))
    spec = BasisSpec(_FAMILY_NAMES[args.family], args.degree, weights=weights)
    x = parse_fraction(args.x)
    row = eval_basis_row(spec, x)
    for i, value in enumerate(row):
        print(f"u_{i}({args.x}) = {fraction_str(value)}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "tables":
            return _cmd_tables(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_eval(args)
    except SearchExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEARCH_EXHAUSTED
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
