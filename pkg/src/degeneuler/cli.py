"""Command-line interface.

Usage::

    degeneuler numbers --d 3 --chi 1 --lambda 1/2 --nmax 6
    degeneuler poly --d 1 --chi 0 --lambda 1/2 --n 1 --x 2
    degeneuler rsum --k 0 --n 2 --d 3 --chi 1 --lambda 7
    degeneuler chars --d 9 --format csv
    degeneuler padic --f 0,1 --p 3 --N 1..3
    degeneuler check all --default-grid --out report.json
    degeneuler check thm2 --d 3 --chi 1 --w1 3 --w2 1 --lambda 1/2 --L 6

Exit codes: 0 success (every identity holds), 1 some identity failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

import yaml

from .characters import conductor, enumerate_characters, get_character, is_primitive, parity
from .degen import (
    QPolynomial,
    fermionic_integral,
    finite_level_sum,
    generalized_numbers,
    generalized_poly_eval,
    r_sum,
    twisted_fermionic_integral,
)
from .exactnum import CyclotomicElement, p_adic_valuation
from .identities import CHECKERS, IDENTITY_IDS, IdentityReport, SweepConfig, sweep


class UsageError(Exception):
    pass


# -- value rendering -----------------------------------------------------------


def render_value(value):
    """JSON-ready exact rendering: ``"p/q"`` strings, or ``{order, coeffs}`` for cyclotomics."""
    if isinstance(value, CyclotomicElement):
        if value.order <= 2:
            return str(Fraction(value.coefficients[0]))
        return {"order": value.order, "coeffs": [str(Fraction(c)) for c in value.coefficients]}
    if isinstance(value, float):  # infinite valuation
        return "inf"
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    raise TypeError(f"cannot render {type(value).__name__}")


def parse_value(obj):
    """Inverse of :func:`render_value`."""
    if isinstance(obj, dict):
        return CyclotomicElement(obj["order"], [Fraction(c) for c in obj["coeffs"]])
    if obj == "inf":
        return float("inf")
    return Fraction(obj)


def _flat(value) -> str:
    rendered = render_value(value)
    if isinstance(rendered, dict):
        return "(" + ";".join(rendered["coeffs"]) + f")_{rendered['order']}"
    return rendered


def _latex(value) -> str:
    if isinstance(value, CyclotomicElement) and value.order > 2:
        terms = []
        for k, c in enumerate(value.coefficients):
            if c == 0:
                continue
            c = Fraction(c)
            coef = f"\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}" if c.denominator > 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            if k == 0:
                terms.append((sign, coef))
            else:
                zeta = f"\\zeta_{{{value.order}}}" + (f"^{{{k}}}" if k > 1 else "")
                terms.append((sign, zeta if abs(c) == 1 else coef + zeta))
        if not terms:
            return "0"
        body = "".join(f" {s} {t}" for s, t in terms).strip()
        return body[2:] if body.startswith("+ ") else "-" + body[2:]
    c = Fraction(render_value(value))
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


# -- argument parsing helpers ----------------------------------------------------


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact fraction: {text!r}") from exc


def _odd(text: str) -> int:
    v = int(text)
    if v < 1 or v % 2 == 0:
        raise argparse.ArgumentTypeError(f"expected an odd positive integer, got {text}")
    return v


def _int_list(text: str) -> list[int]:
    return [int(t) for t in str(text).split(",") if t.strip()]


def _level_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _poly_list(text: str) -> list[tuple[int, ...]]:
    return [tuple(_int_list(part)) for part in str(text).split(";") if part.strip()]


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(args, header: Sequence[str], rows: list[list], meta: dict, key_rows: str = "rows") -> str:
    """Render ``rows`` (raw values) in the requested format."""
    if args.format == "json":
        doc = dict(meta)
        doc[key_rows] = [{h: _json_cell(v) for h, v in zip(header, row)} for row in rows]
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_csv_cell(v) for v in row])
        return buf.getvalue()
    lines = [
        "\\begin{tabular}{" + "r" * len(header) + "}",
        " & ".join(f"${h}$" if len(h) == 1 else h for h in header) + " \\\\",
        "\\hline",
    ]
    for row in rows:
        lines.append(" & ".join(_latex_cell(v) for v in row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _json_cell(v):
    if isinstance(v, (bool, int)):
        return v
    if isinstance(v, list):
        return [_json_cell(x) for x in v]
    return render_value(v)


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ";".join(_csv_cell(x) for x in v)
    if isinstance(v, int):
        return str(v)
    return _flat(v)


def _latex_cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "$(" + ", ".join(_latex_cell(x).strip("$") for x in v) + ")$"
    if isinstance(v, int):
        return f"${v}$"
    return f"${_latex(v)}$"


# -- commands ----------------------------------------------------------------------


def cmd_numbers(args) -> int:
    chi = get_character(args.d, args.chi)
    nums = generalized_numbers(chi, args.lam, args.nmax)
    meta = {"d": args.d, "chi": args.chi, "exponents": list(chi.exponents),
            "lambda": str(args.lam), "order": chi.order}
    rows = [[n, v] for n, v in enumerate(nums.values)]
    _emit(args, _table(args, ["n", "value"], rows, meta))
    return 0


def cmd_poly(args) -> int:
    chi = get_character(args.d, args.chi)
    value = generalized_poly_eval(chi, args.lam, args.n, args.x)
    meta = {"d": args.d, "chi": args.chi, "exponents": list(chi.exponents),
            "lambda": str(args.lam), "x": str(args.x)}
    _emit(args, _table(args, ["n", "value"], [[args.n, value]], meta))
    return 0


def cmd_rsum(args) -> int:
    chi = get_character(args.d, args.chi)
    value = r_sum(args.k, args.n, args.lam, chi)
    meta = {"d": args.d, "chi": args.chi, "exponents": list(chi.exponents),
            "lambda": str(args.lam), "n": args.n}
    _emit(args, _table(args, ["k", "value"], [[args.k, value]], meta))
    return 0


def cmd_chars(args) -> int:
    rows = []
    for chi in enumerate_characters(args.d):
        rows.append([
            chi.index, list(chi.exponents), chi.order, conductor(chi),
            is_primitive(chi), parity(chi), list(chi.values),
        ])
    header = ["index", "exponents", "order", "conductor", "primitive", "parity", "values"]
    if args.format == "json":
        doc = {"d": args.d, "count": len(rows), "rows": [
            {"index": r[0], "exponents": r[1], "order": r[2], "conductor": r[3],
             "primitive": r[4], "parity": r[5], "values": [render_value(v) for v in r[6]]}
            for r in rows
        ]}
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(args, _table(args, header, rows, {}))
    return 0


def cmd_padic(args) -> int:
    if not args.f:
        raise UsageError("--f needs at least one coefficient")
    f = QPolynomial.from_coefficients(args.f)
    chi = get_character(args.d, args.chi)
    twist = None if args.d == 1 else chi
    oracle = fermionic_integral(f) if twist is None else twisted_fermionic_integral(f, chi)
    rows = []
    for level in args.N:
        s = finite_level_sum(f, args.p, level, twist)
        rows.append([level, s, oracle, p_adic_valuation(s - oracle, args.p)])
    meta = {"f": list(args.f), "p": args.p, "d": args.d, "chi": args.chi}
    _emit(args, _table(args, ["N", "S_N", "integral", "valuation"], rows, meta))
    return 0


# -- check ---------------------------------------------------------------------------

_GRID_KEYS = ("d", "chi", "lambda", "w1", "w2", "x", "L", "n", "p", "N", "f")


def _grid_from_mapping(raw: dict) -> dict:
    """Normalize a key -> value(s) mapping from a config file or inline flags."""
    out = {}
    for key, value in raw.items():
        if key not in _GRID_KEYS:
            raise UsageError(f"unknown grid key {key!r}")
        values = value if isinstance(value, list) else [value]
        if key in ("lambda", "x"):
            out["lam" if key == "lambda" else key] = [_fraction(v) for v in values]
        elif key == "chi":
            out[key] = "all" if values == ["all"] else [int(v) for v in values]
        elif key in ("L", "N"):
            out[key] = int(values[-1])
        elif key == "f":
            out[key] = [tuple(int(c) for c in (v if isinstance(v, list) else _int_list(v))) for v in values]
        else:
            out[key] = [int(v) for v in values]
    for key in ("d", "w1", "w2"):
        for v in out.get(key, []):
            if v < 1 or v % 2 == 0:
                raise UsageError(f"{key} must be odd positive integers, got {v}")
    for v in out.get("n", []):
        if v < 1 or v % 2 == 0:
            raise UsageError(f"n must be odd positive integers, got {v}")
    return out


def load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        raw = yaml.safe_load(fh) or {}
    if not isinstance(raw, dict):
        raise UsageError(f"config {path} must be a flat key -> values mapping")
    return _grid_from_mapping(raw)


def report_to_dict(report: IdentityReport) -> dict:
    rows = []
    for r in report.rows:
        row = {"n": r.n, "lhs": render_value(r.lhs), "rhs": render_value(r.rhs), "equal": r.equal}
        if r.routes:
            row["routes"] = [render_value(v) for v in r.routes]
        rows.append(row)
    doc = {
        "identity": report.params.identity,
        "params": report.params.as_dict(),
        "holds": report.holds,
        "rows": rows,
        "first_failure": report.first_failure,
    }
    if report.notes:
        doc["notes"] = list(report.notes)
    return doc


def cmd_check(args) -> int:
    identities = list(IDENTITY_IDS) if args.identity == "all" else [args.identity]
    if args.identity != "all" and args.identity not in CHECKERS:
        raise UsageError(f"unknown identity {args.identity!r}; choose from all, {', '.join(IDENTITY_IDS)}")
    grid: dict = {}
    if not args.default_grid:
        if args.config:
            grid.update(load_config(args.config))
        inline = {k: getattr(args, "g_" + k) for k in _GRID_KEYS if getattr(args, "g_" + k) is not None}
        grid.update(_grid_from_mapping(inline))
    try:
        config = SweepConfig(identities=identities, **grid)
        config.expand()  # validate every tuple before any work starts
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    workers = args.workers if args.workers else (os.cpu_count() or 1)
    reports = sweep(config, workers=workers)
    failures = [r for r in reports if not r.holds]
    doc = {
        "holds": not failures,
        "count": len(reports),
        "failures": len(failures),
        "reports": [report_to_dict(r) for r in reports],
    }
    if args.format == "json":
        _emit(args, json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "params", "n", "lhs", "rhs", "equal"])
        for r in reports:
            params = json.dumps(r.params.as_dict(), sort_keys=True)
            for row in r.rows:
                writer.writerow([r.params.identity, params, row.n, _flat(row.lhs), _flat(row.rhs),
                                 "true" if row.equal else "false"])
        _emit(args, buf.getvalue())
    else:
        lines = ["\\begin{tabular}{llr}", "identity & parameters & holds \\\\", "\\hline"]
        for r in reports:
            params = ", ".join(f"{k}={v}" for k, v in r.params.as_dict().items())
            lines.append(f"\\texttt{{{r.params.identity.replace('_', chr(92) + '_')}}} & {params} & "
                         f"{'yes' if r.holds else 'no'} \\\\")
        lines.append("\\end{tabular}")
        _emit(args, "\n".join(lines) + "\n")
    summary = f"{len(reports) - len(failures)}/{len(reports)} identity checks hold"
    print(summary, file=sys.stderr)
    if failures:
        first = failures[0]
        row = first.rows[first.first_failure]
        print(
            f"FAIL {first.params.identity} {json.dumps(first.params.as_dict())} "
            f"at n={first.first_failure}: lhs={_flat(row.lhs)} rhs={_flat(row.rhs)}",
            file=sys.stderr,
        )
        return 1
    return 0


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes for sweeps (default: all CPUs)")
    common.add_argument("--config", metavar="PATH", help="YAML file of grid key -> list of values")

    parser = argparse.ArgumentParser(
        prog="degeneuler",
        description="Twisted degenerate Euler polynomials and their symmetry identities, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def character_flags(p):
        p.add_argument("--d", type=_odd, default=1, help="odd modulus")
        p.add_argument("--chi", type=int, default=0, help="character index in enumeration order")
        p.add_argument("--lambda", dest="lam", type=_fraction, default=Fraction(0))

    p = sub.add_parser("numbers", parents=[common], help="twisted degenerate Euler numbers")
    character_flags(p)
    p.add_argument("--nmax", type=int, default=8)
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("poly", parents=[common], help="twisted degenerate Euler polynomial value")
    character_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_fraction, default=Fraction(0))
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("rsum", parents=[common], help="alternating character sum R_k(n, lambda | chi)")
    character_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_rsum)

    p = sub.add_parser("chars", parents=[common], help="character table for an odd modulus")
    p.add_argument("--d", type=_odd, required=True)
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("padic", parents=[common], help="finite alternating sums vs the fermionic integral")
    p.add_argument("--f", type=_int_list, required=True, help="integer coefficients, lowest first")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--N", type=_level_range, default=[1, 2, 3], help="level or range like 1..4")
    p.add_argument("--d", type=_odd, default=1)
    p.add_argument("--chi", type=int, default=0)
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("check", parents=[common], help="verify identities over a parameter grid")
    p.add_argument("identity", help="identity id or 'all'")
    p.add_argument("--default-grid", action="store_true", help="ignore --config and grid flags")
    p.add_argument("--d", dest="g_d", type=_int_list)
    p.add_argument("--chi", dest="g_chi", type=lambda s: "all" if s == "all" else _int_list(s))
    p.add_argument("--lambda", dest="g_lambda", type=lambda s: [_fraction(t) for t in s.split(",")])
    p.add_argument("--w1", dest="g_w1", type=_int_list)
    p.add_argument("--w2", dest="g_w2", type=_int_list)
    p.add_argument("--x", dest="g_x", type=lambda s: [_fraction(t) for t in s.split(",")])
    p.add_argument("--L", dest="g_L", type=int)
    p.add_argument("--n", dest="g_n", type=_int_list)
    p.add_argument("--p", dest="g_p", type=_int_list)
    p.add_argument("--N", dest="g_N", type=int)
    p.add_argument("--f", dest="g_f", type=_poly_list, help="polynomials like '1;0,1;0,2,0,1'")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, yaml.YAMLError) as exc:
        print(f"degeneuler {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
