"""Command-line front end.

    degbern table --family beta_number --n-max 5
    degbern table --family stirling --n-max 6 --lambda 0 --format csv
    degbern eval --family beta_poly --n 2 --lambda 0 --x 1/2
    degbern check --filter bernoulli --n-max 8

The degeneracy parameter lambda is spelled ``l`` in all text output.
Exit codes: 0 success, 1 identity failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bernoulli, identities, stirling
from .codec import dumps, encode_poly
from .polybern import poly_bernoulli as _poly_bernoulli
from .rings import Poly, format_fraction


@dataclass(frozen=True)
class Family:
    variables: frozenset[str]
    triangular: bool = False
    needs_r: bool = False
    needs_p: bool = False


FAMILIES: dict[str, Family] = {
    "stirling": Family(frozenset("l"), triangular=True),
    "rstirling": Family(frozenset("l"), triangular=True, needs_r=True),
    "stirling_poly": Family(frozenset("lx"), triangular=True),
    "beta_number": Family(frozenset("l")),
    "beta_poly": Family(frozenset("lx")),
    "carlitz": Family(frozenset("lx")),
    "fubini": Family(frozenset("lxy")),
    "poly_bernoulli": Family(frozenset("lx"), needs_p=True),
}


def _value(family: str, n: int, k: int | None = None, r: int | None = None, p: int | None = None) -> Poly:
    if family == "stirling":
        return stirling.stirling2_deg(n, k)
    if family == "rstirling":
        return stirling.rstirling2_deg(n, k, r)
    if family == "stirling_poly":
        return stirling.stirling_poly(n, k)
    if family == "beta_number":
        return bernoulli.beta_deg_number(n)
    if family == "beta_poly":
        return bernoulli.beta_deg_poly(n)
    if family == "carlitz":
        return bernoulli.carlitz_beta(n)
    if family == "fubini":
        return bernoulli.fubini_deg(n)
    if family == "poly_bernoulli":
        return _poly_bernoulli(p, n)
    raise KeyError(family)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r} (use p/q)") from None


def _lambda_value(text: str) -> Fraction | None:
    if text in ("sym", "symbolic", "l"):
        return None
    return _rational(text)


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degbern",
        description="Exact degenerate Bernoulli, Stirling and Fubini polynomials. "
        "The parameter lambda is written 'l'.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a table of one family")
    table.add_argument("--family", required=True, choices=sorted(FAMILIES))
    table.add_argument("--n-max", required=True, type=_nonnegative)
    table.add_argument("--k-max", type=_nonnegative, help="last column of triangular families")
    table.add_argument("--r", type=_nonnegative, help="shift of rstirling")
    table.add_argument("--p", type=int, help="index of poly_bernoulli")
    table.add_argument(
        "--lambda", dest="lam", type=_lambda_value, default=None, metavar="sym|p/q",
        help="keep l symbolic (default) or substitute a rational",
    )
    table.add_argument("--format", choices=("json", "csv"), default="json")

    check = sub.add_parser("check", help="verify the identity catalog")
    check.add_argument("--filter", default=None, metavar="PREFIX", help="only ids starting with PREFIX")
    check.add_argument("--n-max", type=_nonnegative, default=identities.DEFAULT_LIMITS.n_max)
    check.add_argument("--r-max", type=_nonnegative, default=identities.DEFAULT_LIMITS.r_max)
    check.add_argument("--p-min", type=int, default=identities.DEFAULT_LIMITS.p_min)
    check.add_argument("--p-max", type=int, default=identities.DEFAULT_LIMITS.p_max)
    check.add_argument("--no-timing", action="store_true", help="omit wall_time from the reports")
    check.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)

    ev = sub.add_parser("eval", help="evaluate one member of a family")
    ev.add_argument("--family", required=True, choices=sorted(FAMILIES))
    ev.add_argument("--n", required=True, type=_nonnegative)
    ev.add_argument("--k", type=_nonnegative)
    ev.add_argument("--r", type=_nonnegative)
    ev.add_argument("--p", type=int)
    ev.add_argument("--lambda", dest="lam", type=_rational, default=None, metavar="p/q")
    ev.add_argument("--x", type=_rational, default=None, metavar="p/q")
    ev.add_argument("--y", type=_rational, default=None, metavar="p/q")
    ev.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _check_family_args(parser: argparse.ArgumentParser, args, fam: Family, k_flag: str | None) -> None:
    if fam.needs_r and args.r is None:
        parser.error(f"--family {args.family} requires --r")
    if not fam.needs_r and args.r is not None:
        parser.error(f"--r does not apply to --family {args.family}")
    if fam.needs_p and args.p is None:
        parser.error(f"--family {args.family} requires --p")
    if not fam.needs_p and args.p is not None:
        parser.error(f"--p does not apply to --family {args.family}")
    if k_flag and not fam.triangular and getattr(args, k_flag.lstrip("-").replace("-", "_")) is not None:
        parser.error(f"{k_flag} does not apply to --family {args.family}")


def cmd_table(args, out) -> int:
    fam = FAMILIES[args.family]

    def entry(n: int, k: int | None = None) -> Poly:
        value = _value(args.family, n, k=k, r=args.r, p=args.p)
        return value if args.lam is None else value.evaluate(l=args.lam)

    rows: list = []
    for n in range(args.n_max + 1):
        if fam.triangular:
            top = n if args.k_max is None else min(n, args.k_max)
            rows.append([entry(n, k) for k in range(top + 1)])
        else:
            rows.append(entry(n))

    if args.format == "json":
        params = {"n_max": args.n_max}
        for name in ("k_max", "r", "p"):
            if getattr(args, name) is not None:
                params[name] = getattr(args, name)
        encoded = [[encode_poly(v) for v in row] if fam.triangular else encode_poly(row) for row in rows]
        doc = {
            "family": args.family,
            "lambda": "sym" if args.lam is None else format_fraction(args.lam),
            "params": params,
            "rows": encoded,
        }
        out.write(dumps(doc) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if fam.triangular:
            writer.writerow(["n", "k", "value"])
            for n, row in enumerate(rows):
                for k, v in enumerate(row):
                    writer.writerow([n, k, str(v)])
        else:
            writer.writerow(["n", "value"])
            for n, v in enumerate(rows):
                writer.writerow([n, str(v)])
        out.write(buf.getvalue())
    return 0


def cmd_eval(args, out) -> int:
    value = _value(args.family, args.n, k=args.k, r=args.r, p=args.p)
    assignment = {}
    for name, given in (("l", args.lam), ("x", args.x), ("y", args.y)):
        if given is not None:
            assignment[name] = given
    value = value.evaluate(assignment)
    if args.format == "json":
        out.write(dumps(encode_poly(value)) + "\n")
    else:
        out.write(f"{value}\n")
    return 0


def cmd_check(args, out, err) -> int:
    limits = identities.Limits(n_max=args.n_max, r_max=args.r_max, p_min=args.p_min, p_max=args.p_max)
    cases = identities.matching_cases(args.filter, include_controls=args.inject_failure)
    if not cases:
        err.write(f"degbern check: no identity id starts with {args.filter!r}\n")
        return 2
    reports = [identities.run_identity(case, limits) for case in cases]
    for report in reports:
        out.write(report.to_json(timing=not args.no_timing) + "\n")
    width = max(len(r.id) for r in reports)
    for report in reports:
        err.write(f"{report.id:<{width}}  {report.status:<4}  {report.points:>5} points\n")
    passed = identities.suite_passed(reports)
    failed = sum(not r.passed for r in reports)
    err.write(f"{len(reports)} identities, {failed} failed\n")
    return 0 if passed else 1


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        fam = FAMILIES[args.family]
        _check_family_args(parser, args, fam, "--k-max")
        return cmd_table(args, out)
    if args.command == "eval":
        fam = FAMILIES[args.family]
        _check_family_args(parser, args, fam, "--k")
        if fam.triangular and args.k is None:
            parser.error(f"--family {args.family} requires --k")
        for name, given in (("x", args.x), ("y", args.y)):
            if given is not None and name not in fam.variables:
                parser.error(f"--{name} does not apply to --family {args.family}")
        return cmd_eval(args, out)
    return cmd_check(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
