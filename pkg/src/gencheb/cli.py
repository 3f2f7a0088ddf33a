"""Command-line interface.

Exact values are written as ``"p/q"`` or ``"p/q*pi"`` strings, float values
as JSON numbers. Exit status: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import bernstein as bz
from .approx import fit_monomial, fit_orthogonal
from .genchebyshev import (
    MASS_GRID,
    MassParams,
    expansion_lambdas,
    gen_u,
    leading_lambda,
    theta,
    theta_by_recurrence,
)
from .measures import inner_product, theorem2_integral, theorem2_integral_printed
from .numerics import PiRational, format_exact, parse_rational
from .oracle import theorem2_direct
from .polynomial import Domain, Polynomial
from .verify import run_verification

FUNCTIONS = {
    "exp": math.exp,
    "sin": math.sin,
    "abs-shift": lambda x: abs(x - 0.5),
    "runge": lambda x: 1.0 / (1.0 + 25.0 * (2.0 * x - 1.0) ** 2),
    "cubic": lambda x: 1.0 - 2.0 * x + 0.5 * x**3,
}


class UsageError(Exception):
    pass


def _rational_list(text: str, name: str) -> list[Fraction]:
    out = []
    for pos, item in enumerate(text.split(",")):
        try:
            out.append(parse_rational(item))
        except ValueError:
            raise UsageError(f"{name}[{pos}]: cannot parse {item.strip()!r} as a rational") from None
    return out


def _mass(value: str, name: str) -> Fraction:
    try:
        q = parse_rational(value)
    except ValueError:
        raise UsageError(f"{name}: cannot parse {value!r} as a rational") from None
    if q < 0:
        raise UsageError(f"{name}: masses must be nonnegative, got {value}")
    return q


def _params(args) -> MassParams:
    return MassParams(_mass(args.mass_m, "--mass-m"), _mass(args.mass_n, "--mass-n"))


def _value(v, mode: str):
    if isinstance(v, float):
        return v
    if mode == "float":
        return float(v)
    if isinstance(v, (Fraction, PiRational, int)):
        return format_exact(v)
    return v


def cmd_theta(args) -> tuple[list[dict], dict]:
    rows = []
    for r in range(args.degree + 1):
        rec = theta_by_recurrence(r)
        for i in range(r + 1):
            t = theta(i, r)
            rows.append({"r": r, "i": i, "theta": _value(t, args.mode),
                         "recurrence_ok": t == rec[i]})
    return rows, {}


def cmd_eval(args) -> tuple[list[dict], dict]:
    p = _params(args)
    g = gen_u(args.degree, p)
    if args.x is not None:
        xs = _rational_list(args.x, "x")
    else:
        k = max(args.points, 2)
        xs = [Fraction(-1) + Fraction(2 * j, k - 1) for j in range(k)]
    poly = g.poly.as_float() if args.mode == "float" else g.poly
    rows = []
    for x in xs:
        xv = float(x) if args.mode == "float" else x
        rows.append({"x": _value(x, args.mode), "value": _value(poly(xv), args.mode)})
    return rows, {"n": args.degree, "M": format_exact(p.M), "N": format_exact(p.N)}


def cmd_convert(args) -> tuple[list[dict], dict]:
    coeffs = _rational_list(args.coeffs, "coeffs")
    if args.to == "bernstein":
        poly = Polynomial(coeffs, Domain.UNIT)
        n = args.degree if args.degree is not None else max(poly.degree, 0)
        if poly.degree > n:
            raise UsageError(f"polynomial of degree {poly.degree} does not fit degree {n}")
        out = list(bz.from_monomial(poly, n).coeffs)
    else:
        form = bz.BernsteinForm(coeffs)
        if args.degree is not None:
            if args.degree < form.degree:
                raise UsageError(f"cannot lower degree {form.degree} to {args.degree}")
            form = bz.elevate(form, args.degree)
        mono = bz.to_monomial(form)
        out = list(mono.coeffs) + [Fraction(0)] * (form.degree + 1 - len(mono.coeffs))
    rows = [{"index": k, "coefficient": _value(Fraction(c), args.mode)} for k, c in enumerate(out)]
    return rows, {"basis": args.to}


def cmd_lambdas(args) -> tuple[list[dict], dict]:
    p = _params(args)
    lam = expansion_lambdas(args.degree, p)
    rows = [{"k": k, "lambda": _value(v, args.mode)} for k, v in enumerate(lam)]
    extra = {"n": args.degree}
    if args.degree >= 1:
        lead = leading_lambda(args.degree, p)
        extra["leading_closed_form"] = _value(lead, args.mode)
        extra["leading_matches"] = lead == lam[-1]
    return rows, extra


def cmd_ortho(args) -> tuple[list[dict], dict]:
    p = _params(args)
    polys = [gen_u(n, p).poly for n in range(args.degree + 1)]
    rows = []
    ok = True
    for m in range(args.degree + 1):
        for n in range(m, args.degree + 1):
            v = inner_product(polys[m], polys[n], p)
            if m != n and v != 0:
                ok = False
            rows.append({"m": m, "n": n, "inner_product": _value(v, args.mode)})
    return rows, {"orthogonal": ok, "_fail": not ok}


def cmd_integral(args) -> tuple[list[dict], dict]:
    p = _params(args)
    n, r, i = args.degree, args.r, args.i
    if not 0 <= r <= n:
        raise UsageError(f"need 0 <= r <= n, got r={r}, n={n}")
    v = theorem2_integral(n, r, i, p)
    direct = theorem2_direct(n, r, i, p)
    printed = theorem2_integral_printed(n, r, i, p)
    row = {"n": n, "r": r, "i": i, "value": _value(v, args.mode),
           "direct": _value(direct, args.mode), "printed": _value(printed, args.mode),
           "matches_direct": v == direct}
    return [row], {"_fail": v != direct}


def cmd_verify(args) -> tuple[list[dict], dict]:
    grid = MASS_GRID
    if args.mass_m != "0" or args.mass_n != "0":
        grid = (_params(args),)
    report = run_verification(args.degree, grid)
    return report["checks"], {
        "status": report["status"],
        "printed_form_checks": report["printed_form_checks"],
        "discrepancies": report["discrepancies"],
        "_fail": report["status"] != "PASS",
    }


def cmd_approx(args) -> tuple[list[dict], dict]:
    if args.function not in FUNCTIONS:
        raise UsageError(f"unknown function {args.function!r}; choose from {', '.join(FUNCTIONS)}")
    f = FUNCTIONS[args.function]
    p = _params(args)
    rows = []
    if args.basis in ("monomial", "both"):
        rows.append(fit_monomial(f, args.degree).as_dict())
    if args.basis in ("orthogonal", "both"):
        rows.append(fit_orthogonal(f, args.degree, p).as_dict())
    return rows, {"function": args.function}


COMMANDS = {
    "theta": cmd_theta,
    "eval": cmd_eval,
    "convert": cmd_convert,
    "lambdas": cmd_lambdas,
    "ortho-check": cmd_ortho,
    "integral": cmd_integral,
    "verify": cmd_verify,
    "approx": cmd_approx,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", "-n", type=int, default=None)
    common.add_argument("--mass-m", default="0", help="mass at x=-1 (p/q or decimal)")
    common.add_argument("--mass-n", default="0", help="mass at x=+1 (p/q or decimal)")
    common.add_argument("--mode", choices=["exact", "float"], default="exact")
    common.add_argument("--output", choices=["json", "csv"], default="json")
    common.add_argument("--points", type=int, default=11)

    parser = argparse.ArgumentParser(prog="gencheb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("theta", parents=[common], help="theta coefficient table")
    ev = sub.add_parser("eval", parents=[common], help="evaluate U_n^(M,N) on [-1,1]")
    ev.add_argument("--x", help="comma separated evaluation points")
    cv = sub.add_parser("convert", parents=[common], help="monomial <-> Bernstein on [0,1]")
    cv.add_argument("--to", choices=["bernstein", "monomial"], required=True)
    cv.add_argument("--coeffs", required=True, help="comma separated coefficients")
    sub.add_parser("lambdas", parents=[common], help="expansion coefficients lambda_k")
    sub.add_parser("ortho-check", parents=[common], help="Gram table under the point-mass measure")
    it = sub.add_parser("integral", parents=[common], help="weighted Bernstein x U_i^(M,N) integral")
    it.add_argument("--r", type=int, default=0)
    it.add_argument("--i", type=int, default=0)
    sub.add_parser("verify", parents=[common], help="run all identity checks")
    ap = sub.add_parser("approx", parents=[common], help="least-squares fit of a catalog function")
    ap.add_argument("--function", default="exp")
    ap.add_argument("--basis", choices=["monomial", "orthogonal", "both"], default="both")
    return parser


DEFAULT_DEGREE = {"verify": 12, "convert": None}


def _csv_cell(v):
    if isinstance(v, list):
        return ";".join(str(x) for x in v)
    return v


def render(command: str, rows: list[dict], extra: dict, output: str) -> str:
    extra = {k: v for k, v in extra.items() if not k.startswith("_")}
    if output == "json":
        return json.dumps({"command": command, **extra, "rows": rows}, indent=2)
    buf = io.StringIO()
    if rows:
        fields = list(dict.fromkeys(k for row in rows for k in row))
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: _csv_cell(v) for k, v in row.items()})
    return buf.getvalue().rstrip("\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.degree is None:
        args.degree = DEFAULT_DEGREE.get(args.command, 1)
    if args.degree is not None and args.degree < 0:
        print(f"error: degree must be nonnegative, got {args.degree}", file=sys.stderr)
        return 2
    try:
        rows, extra = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(args.command, rows, extra, args.output))
    return 1 if extra.get("_fail") else 0


if __name__ == "__main__":
    sys.exit(main())
