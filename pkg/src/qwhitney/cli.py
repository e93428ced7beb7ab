"""Command-line surface: triangle tables, row-sum sequences, series
expansion, and the identity audit."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from .audit import DEFAULT_GRID, ParamGrid, REGISTRY, run_all
from .qalg import EvalAtZeroError, LaurentPoly
from .triangles import FamilyId, Params, rows_for
from .formulas import whitney2_rational_gf
from .upoly import upoly_coeff

_FORMATS = ("text", "csv", "json", "latex")


def _family(name: str) -> FamilyId:
    try:
        return FamilyId(name)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown family {name!r}")


def _q_spec(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"q must be an integer or p/d fraction, got {text!r}")


def _cell(value: LaurentPoly, q: Fraction | None):
    if q is None:
        return value
    return value.eval_at(q)


def _cell_str(value) -> str:
    return str(value)


def _cell_json(value):
    if isinstance(value, LaurentPoly):
        return value.to_json_dict()
    return str(value)


def _cell_latex(value) -> str:
    if isinstance(value, LaurentPoly):
        return value.latex()
    return str(value)


def _write(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _csv_str(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_table(args: argparse.Namespace) -> int:
    params = Params(args.m, args.r)
    rows = rows_for(args.family, params, args.nmax, args.cache)
    cells = [[_cell(v, args.q) for v in row] for row in rows]
    if args.format == "text":
        text = "\n".join(", ".join(_cell_str(v) for v in row) for row in cells) + "\n"
    elif args.format == "csv":
        flat = [[n, k, _cell_str(v)] for n, row in enumerate(cells) for k, v in enumerate(row)]
        text = _csv_str(flat, ["n", "k", "value"])
    elif args.format == "json":
        doc = {
            "family": args.family.value,
            "m": args.m,
            "r": args.r,
            "nmax": args.nmax,
            "rows": [[_cell_json(v) for v in row] for row in cells],
        }
        if args.q is not None:
            doc["q"] = str(args.q)
        text = json.dumps(doc, indent=1) + "\n"
    else:
        body = " \\\\\n".join(" & ".join(f"${_cell_latex(v)}$" for v in row) for row in cells)
        cols = "r" * (args.nmax + 1)
        text = f"\\begin{{tabular}}{{{cols}}}\n{body} \\\\\n\\end{{tabular}}\n"
    _write(text, args.output)
    return 0


def cmd_dowling(args: argparse.Namespace) -> int:
    params = Params(args.m, args.r)
    family = {1: FamilyId.W2, 2: FamilyId.W2_FORM2, 3: FamilyId.W2_FORM3}[args.form]
    rows = rows_for(family, params, args.nmax, args.cache)
    values = []
    for row in rows:
        total = row[0]
        for v in row[1:]:
            total = total + v
        values.append(_cell(total, args.q))
    if args.format == "text":
        text = ", ".join(_cell_str(v) for v in values) + "\n"
    elif args.format == "csv":
        text = _csv_str([[n, _cell_str(v)] for n, v in enumerate(values)], ["n", "value"])
    elif args.format == "json":
        doc = {
            "form": args.form,
            "m": args.m,
            "r": args.r,
            "nmax": args.nmax,
            "values": [_cell_json(v) for v in values],
        }
        if args.q is not None:
            doc["q"] = str(args.q)
        text = json.dumps(doc, indent=1) + "\n"
    else:
        body = " & ".join(f"${_cell_latex(v)}$" for v in values)
        text = (
            f"\\begin{{tabular}}{{{'r' * len(values)}}}\n{body} \\\\\n\\end{{tabular}}\n"
        )
    _write(text, args.output)
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    params = Params(args.m, args.r)
    series = whitney2_rational_gf(params, args.k, args.order)
    pairs = [(n, upoly_coeff(series, n)) for n in range(args.k, args.order + 1)]
    if args.q is not None:
        pairs = [(n, v.eval_at(args.q)) for n, v in pairs]
    if args.format == "text":
        text = "\n".join(f"({n}, {_cell_str(v)})" for n, v in pairs) + "\n"
    elif args.format == "csv":
        text = _csv_str([[n, _cell_str(v)] for n, v in pairs], ["n", "value"])
    elif args.format == "json":
        doc = {
            "family": "w2",
            "k": args.k,
            "m": args.m,
            "r": args.r,
            "order": args.order,
            "coefficients": [{"n": n, "value": _cell_json(v)} for n, v in pairs],
        }
        if args.q is not None:
            doc["q"] = str(args.q)
        text = json.dumps(doc, indent=1) + "\n"
    else:
        body = " \\\\\n".join(f"{n} & ${_cell_latex(v)}$" for n, v in pairs)
        text = f"\\begin{{tabular}}{{rl}}\n{body} \\\\\n\\end{{tabular}}\n"
    _write(text, args.output)
    return 0


_GRID_KEYS = ("m", "r", "nmax")


def parse_grid(spec: str | None) -> ParamGrid:
    """Parse 'm=1,2 r=-2..3 nmax=8' (separators ';' or whitespace); omitted
    keys keep their defaults."""
    m_values = DEFAULT_GRID.m_values
    r_values = DEFAULT_GRID.r_values
    nmax = DEFAULT_GRID.nmax
    if spec:
        for token in re.split(r"[;\s]+", spec.strip()):
            if not token:
                continue
            if "=" not in token:
                raise ValueError(f"grid token {token!r} is not key=values")
            key, _, raw = token.partition("=")
            if key not in _GRID_KEYS:
                raise ValueError(f"unknown grid key {key!r}")
            values: list[int] = []
            for part in raw.split(","):
                if ".." in part:
                    lo, _, hi = part.partition("..")
                    values.extend(range(int(lo), int(hi) + 1))
                else:
                    values.append(int(part))
            if key == "m":
                m_values = tuple(values)
            elif key == "r":
                r_values = tuple(values)
            else:
                if len(values) != 1:
                    raise ValueError("nmax takes a single value")
                nmax = values[0]
    return ParamGrid(m_values, r_values, nmax)


def cmd_audit(args: argparse.Namespace) -> int:
    report = run_all(args.grid, args.check or None)
    if not args.quiet:
        _write(report.render_table(), args.output)
    if args.json is not None:
        _write(report.to_json_str(), args.json)
    return 0 if report.clean else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwhitney",
        description=(
            "Exact q-analogue Whitney, Whitney-Lah and Dowling number families: "
            "tables, generating-function expansion, and an identity audit."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, nmax_help: str) -> None:
        p.add_argument("--m", type=int, required=True, help="step parameter, >= 1")
        p.add_argument("--r", type=int, required=True, help="shift parameter, any integer")
        p.add_argument("--nmax", type=int, required=True, help=nmax_help)
        p.add_argument("--format", choices=_FORMATS, default="text")
        p.add_argument("--q", type=_q_spec, default=None, help="evaluate at q (integer or p/d)")
        p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        p.add_argument("--cache", default=None, help="triangle row cache directory")

    p_table = sub.add_parser("table", help="print triangle rows 0..nmax")
    p_table.add_argument(
        "--family",
        type=_family,
        required=True,
        help="one of " + ", ".join(f.value for f in FamilyId),
    )
    add_common(p_table, "last row to print")
    p_table.set_defaults(fn=cmd_table)

    p_dow = sub.add_parser("dowling", help="print a row-sum sequence")
    p_dow.add_argument("--form", type=int, choices=(1, 2, 3), required=True)
    add_common(p_dow, "last index to print")
    p_dow.set_defaults(fn=cmd_dowling)

    p_exp = sub.add_parser("expand", help="expand a column generating series")
    p_exp.add_argument("--k", type=int, required=True, help="column index, >= 0")
    p_exp.add_argument("--order", type=int, required=True, help="truncation order, >= k")
    p_exp.add_argument("--m", type=int, required=True)
    p_exp.add_argument("--r", type=int, required=True)
    p_exp.add_argument("--format", choices=_FORMATS, default="text")
    p_exp.add_argument("--q", type=_q_spec, default=None)
    p_exp.add_argument("-o", "--output", default=None)
    p_exp.set_defaults(fn=cmd_expand)

    p_aud = sub.add_parser("audit", help="run the identity audit")
    p_aud.add_argument(
        "--grid",
        default=None,
        help="grid spec like 'm=1,2 r=-2..3 nmax=10' (defaults: m=1..3, r=-2..3, nmax=10)",
    )
    p_aud.add_argument(
        "--check",
        action="append",
        default=None,
        metavar="ID",
        help="run only this check id (repeatable)",
    )
    p_aud.add_argument("--json", default=None, metavar="PATH", help="also write a JSON report")
    p_aud.add_argument("--quiet", action="store_true", help="suppress the text table")
    p_aud.add_argument("-o", "--output", default=None, help="table output path (default stdout)")
    p_aud.set_defaults(fn=cmd_audit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("table", "dowling"):
        if args.m < 1:
            parser.error("--m must be >= 1")
        if args.nmax < 0:
            parser.error("--nmax must be >= 0")
    if args.command == "expand":
        if args.m < 1:
            parser.error("--m must be >= 1")
        if args.k < 0:
            parser.error("--k must be >= 0")
        if args.order < args.k:
            parser.error("--order must be >= --k")
    if args.command == "audit":
        try:
            args.grid = parse_grid(args.grid)
        except (ValueError, TypeError) as exc:
            parser.error(f"bad --grid: {exc}")
        for check_id in args.check or ():
            if check_id not in REGISTRY:
                parser.error(f"unknown check id {check_id!r}")
    try:
        return args.fn(args)
    except EvalAtZeroError:
        parser.error("--q 0 is not allowed for families with negative q-exponents")
    except ValueError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
