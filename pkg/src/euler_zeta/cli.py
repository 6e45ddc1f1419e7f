"""Command line front end: values, tables, identities, verification, benchmarks.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, TextIO

from . import verify as verification
from .exactmath import PiPolynomial, _round_to_decimal, eval_pi_polynomial
from .relations import relation_at
from .zeta import Method, euler_zeta_coefficients

__all__ = [
    "OutputRecord",
    "CSV_HEADER",
    "METHOD_ORDER",
    "format_exact",
    "parse_exact",
    "build_parser",
    "main",
]

#: Fixed expansion order of `--methods all`, so CSV diffs stay stable.
METHOD_ORDER = [
    Method.NEW_THEOREM,
    Method.COROLLARY,
    Method.LEERYOO_DERIVED,
    Method.LEERYOO_PRINTED,
    Method.CLOSED_FORM,
]

CSV_HEADER = ["s", "method", "numerator", "denominator", "pi_power", "decimal"]

_ERRATUM_WARNING = (
    "warning: leeryoo-printed reproduces a constant with a known erratum "
    "(denominator factor 2s+3 instead of 2s+1); its values disagree with "
    "every other method for s >= 2. Use leeryoo-derived for the corrected form."
)


@dataclass
class OutputRecord:
    """One rendered value; `exact` is `num/den * pi^POWER` and round-trips."""

    s: int
    method: str
    exact: str
    decimal: str | None = None
    digits: int | None = None


_EXACT_RE = re.compile(r"^(-?\d+)/(\d+) \* pi\^(-?\d+)$")


def format_exact(coeff: Fraction, pi_power: int) -> str:
    return f"{coeff.numerator}/{coeff.denominator} * pi^{pi_power}"


def parse_exact(text: str) -> tuple[Fraction, int]:
    """Inverse of :func:`format_exact`; recovers the identical rational."""
    match = _EXACT_RE.match(text)
    if not match:
        raise ValueError(f"not an exact rendering: {text!r}")
    return Fraction(int(match[1]), int(match[2])), int(match[3])


def _decimal_string(coeff: Fraction, s: int, digits: int) -> str:
    enclosed = eval_pi_polynomial(PiPolynomial({s: coeff}), digits + 2)
    return str(_round_to_decimal(Fraction(enclosed.value), digits))


def _record(s: int, method: Method, digits: int | None) -> OutputRecord:
    coeff = euler_zeta_coefficients(s, method)[-1]
    record = OutputRecord(s=s, method=method.value, exact=format_exact(coeff, 2 * s))
    if digits is not None:
        record.decimal = _decimal_string(coeff, s, digits)
        record.digits = digits
    return record


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _record_json(record: OutputRecord) -> dict:
    data: dict = {"s": record.s, "method": record.method, "exact": record.exact}
    if record.decimal is not None:
        data["decimal"] = record.decimal
        data["digits"] = record.digits
    return data


def _record_csv_row(record: OutputRecord) -> list[str]:
    coeff, pi_power = parse_exact(record.exact)
    return [
        str(record.s),
        record.method,
        str(coeff.numerator),
        str(coeff.denominator),
        str(pi_power),
        record.decimal or "",
    ]


def _emit_records(records: Sequence[OutputRecord], fmt: str, out: TextIO) -> None:
    if fmt == "plain":
        for record in records:
            line = f"zeta_E({2 * record.s}) = {record.exact}"
            if record.decimal is not None:
                line += f" ~= {record.decimal}"
            print(line, file=out)
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record in records:
            writer.writerow(_record_csv_row(record))
    else:
        payload = [_record_json(record) for record in records]
        json.dump(payload[0] if len(records) == 1 else payload, out, indent=2)
        out.write("\n")


# ---------------------------------------------------------------------------
# argument types
# ---------------------------------------------------------------------------


def _int_at_least(minimum: int) -> Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value

    return convert


_positive_int = _int_at_least(1)


def _method_arg(text: str) -> Method:
    try:
        return Method(text)
    except ValueError:
        names = ", ".join(m.value for m in METHOD_ORDER)
        raise argparse.ArgumentTypeError(f"unknown method {text!r} (choose from: {names})")


def _method_list_arg(text: str) -> list[Method]:
    if text == "all":
        return list(METHOD_ORDER)
    return [_method_arg(part) for part in text.split(",")]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_value(args: argparse.Namespace) -> int:
    if args.method is Method.LEERYOO_PRINTED:
        print(_ERRATUM_WARNING, file=sys.stderr)
    _emit_records([_record(args.s, args.method, args.digits)], args.format, sys.stdout)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if any(m is Method.LEERYOO_PRINTED for m in args.methods):
        print(_ERRATUM_WARNING, file=sys.stderr)
    records = [
        _record(s, method, args.digits)
        for s in range(1, args.s_max + 1)
        for method in args.methods
    ]
    _emit_records(records, args.format, sys.stdout)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verification.run_all(args.s_max)
    width = max(len(result.name) for result in results)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}  {result.name:<{width}}  {result.detail}")
    failed = sum(1 for result in results if not result.passed)
    print(f"{len(results) - failed}/{len(results)} suites passed")
    return 0 if failed == 0 else 1


def _cmd_identities(args: argparse.Namespace) -> int:
    relation = relation_at(args.m, args.x)
    unknown = "zeta_E" if relation.family.value == "euler-zeta" else "zeta"
    if args.format == "plain":
        terms = " + ".join(f"({q})*v_{k}" for k, q in relation.coefficients.items())
        print(f"substitution x={args.x} on t^(2m) with m={args.m} [{relation.family.value}]")
        print(f"  {terms} = {relation.rhs}")
        print(f"  where v_k = {unknown}(2k)/pi^(2k)")
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["m", "x", "family", "k", "coefficient", "rhs"])
        for k, q in relation.coefficients.items():
            writer.writerow([args.m, args.x, relation.family.value, k, str(q), str(relation.rhs)])
    else:
        payload = {
            "m": args.m,
            "x": args.x,
            "family": relation.family.value,
            "coefficients": {str(k): str(q) for k, q in relation.coefficients.items()},
            "rhs": str(relation.rhs),
        }
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    rows: list[tuple[str, float, int]] = []
    for method in METHOD_ORDER:
        best = float("inf")
        table: list[Fraction] = []
        for _ in range(args.repeats):
            start = time.perf_counter()
            table = euler_zeta_coefficients(args.s_max, method, fresh=True)
            best = min(best, time.perf_counter() - start)
        bits = max(
            max(c.numerator.bit_length(), c.denominator.bit_length()) for c in table
        )
        rows.append((method.value, best, bits))
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["method", "s_max", "repeats", "best_seconds", "max_coefficient_bits"])
        for name, seconds, bits in rows:
            writer.writerow([name, args.s_max, args.repeats, f"{seconds:.6f}", bits])
    else:
        print(f"table to s_max={args.s_max}, best of {args.repeats} repeat(s)")
        for name, seconds, bits in rows:
            print(f"  {name:<16} {seconds:>10.6f} s   max coefficient {bits} bits")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_format(parser: argparse.ArgumentParser, choices: tuple[str, ...] = ("plain", "csv", "json")) -> None:
    parser.add_argument("--format", choices=choices, default="plain", help="output format")


def _add_digits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--digits",
        type=_positive_int,
        nargs="?",
        const=30,
        default=None,
        help="include a decimal rendering (default 30 digits when the flag is bare)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euler-zeta",
        description="Exact Euler zeta values at even arguments, zeta_E(2s) = c_s * pi^(2s).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    value = sub.add_parser("value", help="one value by a chosen method")
    value.add_argument("--s", type=_positive_int, required=True, help="half the argument, s >= 1")
    value.add_argument("--method", type=_method_arg, default=Method.NEW_THEOREM,
                       help="one of: " + ", ".join(m.value for m in METHOD_ORDER))
    _add_format(value)
    _add_digits(value)
    value.set_defaults(func=_cmd_value)

    table = sub.add_parser("table", help="rows for s = 1..s_max across methods")
    table.add_argument("--s-max", dest="s_max", type=_positive_int, required=True)
    table.add_argument("--methods", type=_method_list_arg, default=[Method.NEW_THEOREM],
                       help="comma-separated method names, or 'all'")
    _add_format(table)
    _add_digits(table)
    table.set_defaults(func=_cmd_table)

    verify = sub.add_parser("verify", help="run every cross-check suite")
    verify.add_argument("--s-max", dest="s_max", type=_int_at_least(2), required=True)
    verify.set_defaults(func=_cmd_verify)

    identities = sub.add_parser("identities", help="show the substitution relation for (m, x)")
    identities.add_argument("--m", type=_positive_int, required=True)
    identities.add_argument("--x", type=int, choices=[0, 1, 2], required=True)
    _add_format(identities)
    identities.set_defaults(func=_cmd_identities)

    bench = sub.add_parser("bench", help="time full-table computation per method")
    bench.add_argument("--s-max", dest="s_max", type=_int_at_least(2), required=True)
    bench.add_argument("--repeats", type=_positive_int, default=3)
    _add_format(bench, choices=("plain", "csv"))
    bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)
