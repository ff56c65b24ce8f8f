"""Command-line front end.

Reports go to stdout as JSON (add --pretty for tables). Exit codes: 0 on
success, 1 when a mathematical precondition fails (the message names it),
2 on parse or usage errors. KUMMER_LCD_SPEC_DIR sets a default directory for
curve-spec lookups; builtin names like hermitian-q3 work everywhere a spec
path does.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from . import reference_checks
from .codes import (build_code, construction_divisors, dual, hull,
                    lcd_construct_maxcur, min_distance, DEFAULT_MINDIST_BUDGET)
from .curves import (KummerCurve, builtin_curve, format_divisor,
                     load_curve_spec, parse_divisor, parse_place)
from .functions import ell, format_function, riemann_roch_basis
from .gf import ParseError, format_element, format_element_pretty
from .semigroup import (gamma_plus_multi, gap_set_single, nonspecial_degree_g,
                        nonspecial_degree_g_minus_1)


def _resolve_curve(arg: str) -> KummerCurve:
    if os.path.exists(arg):
        return load_curve_spec(arg)
    spec_dir = os.environ.get("KUMMER_LCD_SPEC_DIR")
    if spec_dir:
        candidate = os.path.join(spec_dir, arg)
        if os.path.exists(candidate):
            return load_curve_spec(candidate)
        candidate = os.path.join(spec_dir, arg + ".json")
        if os.path.exists(candidate):
            return load_curve_spec(candidate)
    try:
        return builtin_curve(arg)
    except ValueError:
        raise ParseError(
            f"curve {arg!r}: no such file and not a builtin curve name")


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        _emit_pretty(report)
    else:
        print(json.dumps(report, indent=2))


def _emit_pretty(report: dict, indent: str = "") -> None:
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _emit_pretty(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                _emit_pretty(item, indent + "  ")
                print()
        else:
            print(f"{indent}{key}: {value}")


def _matrix_csv(path: str, code_or_rows, column_places, row_labels,
                pretty_cells: bool = False) -> None:
    fmt = format_element_pretty if pretty_cells else format_element
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["function"] + [
            f"({format_element(p.a)},{format_element(p.b)})" for p in column_places])
        for label, row in zip(row_labels, code_or_rows):
            writer.writerow([label] + [fmt(x) for x in row])


def _print_matrix_pretty(rows, column_places, row_labels) -> None:
    header = [""] + [f"({format_element_pretty(p.a)},{format_element_pretty(p.b)})"
                     for p in column_places]
    table = [header]
    for label, row in zip(row_labels, rows):
        table.append([label] + [format_element_pretty(x) for x in row])
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    for r in table:
        print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))


def _code_report(code, cert=None, d=None) -> dict:
    report = {
        "n": code.n if code else None,
        "k": code.k if code else None,
        "d": d,
        "hull_dim": hull(code).k if code else None,
        "lcd": (hull(code).k == 0) if code else False,
        "certificate": None,
    }
    if cert is not None:
        report["certificate"] = {
            "family": cert.family,
            "G": format_divisor(cert.G),
            "H": format_divisor(cert.H) if cert.H is not None else None,
            "gcd": format_divisor(cert.gcdGH) if cert.gcdGH is not None else None,
            "checks": cert.checks,
            "lcd": cert.lcd,
        }
    return report


# ---------------------------------------------------------------------------
# subcommands

def cmd_curve_info(args) -> int:
    curve = _resolve_curve(args.curve)
    report = {
        "command": "curve info",
        "inputs": {"curve": args.curve},
        "results": {
            "label": curve.label,
            "r": curve.r,
            "m": curve.m,
            "genus": curve.genus,
            "num_rational_points": len(curve.rational_points()),
            "deg_standard_D": curve.standard_D().degree,
        },
        "checks": [],
    }
    _emit(report, args.pretty)
    return 0


def cmd_curve_points(args) -> int:
    curve = _resolve_curve(args.curve)
    report = {
        "command": "curve points",
        "inputs": {"curve": args.curve},
        "results": {"points": [p.label() for p in curve.rational_points()]},
        "checks": [],
    }
    _emit(report, args.pretty)
    return 0


def cmd_rr_basis(args) -> int:
    curve = _resolve_curve(args.curve)
    G = parse_divisor(curve, args.divisor)
    basis = riemann_roch_basis(curve, G)
    report = {
        "command": "rr basis",
        "inputs": {"curve": args.curve, "divisor": format_divisor(G)},
        "results": {
            "dimension": basis.dimension,
            "basis": [format_function(f) for f in basis.functions],
        },
        "checks": [],
    }
    _emit(report, args.pretty)
    return 0


def cmd_semigroup(args) -> int:
    curve = _resolve_curve(args.curve)
    results: dict = {}
    if args.what == "gaps":
        results["gaps"] = sorted(gap_set_single(curve))
    else:
        indices = [int(t) for t in args.tuple.split(",")] if args.tuple else [1, 2]
        if len(set(indices)) != len(indices):
            raise ParseError("--tuple repeats a place index")
        for i in indices:
            curve.ramified_place(i)
        results["tuple"] = indices
        results["gamma"] = sorted(gamma_plus_multi(curve, len(indices)))
    report = {
        "command": f"semigroup {args.what}",
        "inputs": {"curve": args.curve, "tuple": args.tuple},
        "results": results,
        "checks": [],
    }
    _emit(report, args.pretty)
    return 0


def cmd_nonspecial(args) -> int:
    curve = _resolve_curve(args.curve)
    if args.degree == "g":
        divisor = nonspecial_degree_g(curve)
    else:
        P = parse_place(curve, args.minus or "Pinf")
        divisor = nonspecial_degree_g_minus_1(curve, P)
    report = {
        "command": "nonspecial",
        "inputs": {"curve": args.curve, "degree": args.degree, "minus": args.minus},
        "results": {
            "divisor": format_divisor(divisor),
            "degree": divisor.degree,
            "ell": ell(curve, divisor),
        },
        "checks": [],
    }
    _emit(report, args.pretty)
    return 0


def _build_from_args(args):
    curve = _resolve_curve(args.curve)
    if args.D != "standard":
        raise ParseError("only --D standard is supported")
    G = parse_divisor(curve, args.G)
    code = build_code(curve, curve.standard_D(), G)
    return curve, code


def cmd_code_build(args) -> int:
    curve, code = _build_from_args(args)
    report = {
        "command": "code build",
        "inputs": {"curve": args.curve, "G": args.G, "D": args.D},
        "results": _code_report(code),
        "checks": [],
    }
    labels = [f"row{i}" for i in range(code.k)]
    if args.out:
        _matrix_csv(args.out, code.generator, code.column_labels, labels)
        report["results"]["matrix_csv"] = args.out
    _emit(report, args.pretty)
    if args.pretty:
        _print_matrix_pretty(code.generator, code.column_labels, labels)
    return 0


def cmd_code_dual(args) -> int:
    curve, code = _build_from_args(args)
    dual_code = dual(code)
    report = {
        "command": "code dual",
        "inputs": {"curve": args.curve, "G": args.G, "D": args.D},
        "results": _code_report(dual_code),
        "checks": [],
    }
    if args.out:
        _matrix_csv(args.out, dual_code.generator, dual_code.column_labels,
                    [f"row{i}" for i in range(dual_code.k)])
        report["results"]["matrix_csv"] = args.out
    _emit(report, args.pretty)
    return 0


def cmd_code_hull(args) -> int:
    curve, code = _build_from_args(args)
    hull_code = hull(code)
    report = {
        "command": "code hull",
        "inputs": {"curve": args.curve, "G": args.G, "D": args.D},
        "results": {
            "n": code.n,
            "k": code.k,
            "hull_dim": hull_code.k,
            "lcd": hull_code.k == 0,
        },
        "checks": [],
    }
    if args.out:
        _matrix_csv(args.out, hull_code.generator, hull_code.column_labels,
                    [f"row{i}" for i in range(hull_code.k)])
        report["results"]["matrix_csv"] = args.out
    _emit(report, args.pretty)
    return 0


def cmd_code_lcd_check(args) -> int:
    if args.construction == "maxcur":
        if not args.curve or not args.G:
            raise ParseError("maxcur needs --curve and --G")
        curve = _resolve_curve(args.curve)
        divisors = [parse_divisor(curve, args.G)]
    elif args.construction == "hermitian":
        curve = builtin_curve(f"hermitian-q{args.q}")
        divisors = construction_divisors("hermitian", curve, args.q)
    elif args.construction == "curve1":
        curve = builtin_curve(f"curve1-q{args.q}")
        divisors = construction_divisors("curve1", curve, args.q)
    else:
        if args.r is None:
            raise ParseError("curve2 needs --r")
        curve = builtin_curve(f"curve2-q{args.q}-r{args.r}")
        divisors = construction_divisors("curve2", curve, args.q, args.r)
    runs = []
    all_lcd = True
    for G in divisors:
        code, cert = lcd_construct_maxcur(curve, G,
                                          allow_remark_family=args.allow_remark_family)
        runs.append(_code_report(code, cert))
        all_lcd = all_lcd and cert.lcd
    report = {
        "command": "code lcd-check",
        "inputs": {"construction": args.construction, "q": args.q, "r": args.r,
                   "curve": args.curve, "G": args.G,
                   "allow_remark_family": args.allow_remark_family},
        "results": {"curve": curve.label, "runs": runs},
        "checks": [{"name": f"lcd-{i}", "pass": run["certificate"]["lcd"],
                    "detail": run["certificate"]["G"]}
                   for i, run in enumerate(runs)],
    }
    _emit(report, args.pretty)
    return 0 if all_lcd else 1


def cmd_code_mindist(args) -> int:
    curve, code = _build_from_args(args)
    result = min_distance(code, budget=args.budget)
    report = {
        "command": "code mindist",
        "inputs": {"curve": args.curve, "G": args.G, "budget": args.budget},
        "results": {
            "n": code.n,
            "k": code.k,
            "d": result.d,
            "exact": result.exact,
            "designed_bound": result.designed_bound,
        },
        "checks": [],
    }
    _emit(report, args.pretty)
    return 0


def cmd_verify(args) -> int:
    results = reference_checks.run_checks(args.which)
    checks = [{"name": name, "pass": ok, "detail": detail}
              for name, ok, detail in results]
    ok_all = all(ok for _, ok, _ in results)
    report = {
        "command": "verify paper-examples",
        "inputs": {"which": args.which},
        "results": {"passed": sum(1 for _, ok, _ in results if ok),
                    "failed": sum(1 for _, ok, _ in results if not ok)},
        "checks": checks,
    }
    _emit(report, args.pretty)
    return 0 if ok_all else 1


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer-lcd",
        description="Evaluation codes, hulls, and LCD constructions on "
                    "Kummer-type curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--pretty", action="store_true",
                       help="human-readable tables instead of JSON")

    curve = sub.add_parser("curve", help="curve data")
    curve_sub = curve.add_subparsers(dest="what", required=True)
    info = curve_sub.add_parser("info")
    info.add_argument("--curve", required=True)
    add_common(info)
    info.set_defaults(func=cmd_curve_info)
    points = curve_sub.add_parser("points")
    points.add_argument("--curve", required=True)
    add_common(points)
    points.set_defaults(func=cmd_curve_points)

    rr = sub.add_parser("rr", help="Riemann-Roch spaces")
    rr_sub = rr.add_subparsers(dest="what", required=True)
    basis = rr_sub.add_parser("basis")
    basis.add_argument("--curve", required=True)
    basis.add_argument("--divisor", required=True)
    add_common(basis)
    basis.set_defaults(func=cmd_rr_basis)

    semi = sub.add_parser("semigroup", help="gap sets and minimal generators")
    semi.add_argument("what", choices=["gaps", "gamma"])
    semi.add_argument("--curve", required=True)
    semi.add_argument("--tuple", default=None,
                      help="comma-separated ramified indices, e.g. 1,2,3")
    add_common(semi)
    semi.set_defaults(func=cmd_semigroup)

    nonspecial = sub.add_parser("nonspecial", help="explicit non-special divisors")
    nonspecial.add_argument("--curve", required=True)
    nonspecial.add_argument("--degree", choices=["g", "g-1"], required=True)
    nonspecial.add_argument("--minus", default=None,
                            help="place to subtract for degree g-1 (default Pinf)")
    add_common(nonspecial)
    nonspecial.set_defaults(func=cmd_nonspecial)

    code = sub.add_parser("code", help="evaluation codes")
    code_sub = code.add_subparsers(dest="what", required=True)
    for name, func in (("build", cmd_code_build), ("dual", cmd_code_dual),
                       ("hull", cmd_code_hull)):
        p = code_sub.add_parser(name)
        p.add_argument("--curve", required=True)
        p.add_argument("--G", required=True)
        p.add_argument("--D", default="standard")
        p.add_argument("--out", default=None, help="write the matrix as CSV")
        add_common(p)
        p.set_defaults(func=func)
    lcd = code_sub.add_parser("lcd-check")
    lcd.add_argument("--construction", required=True,
                     choices=["maxcur", "curve1", "curve2", "hermitian"])
    lcd.add_argument("--q", type=int, default=None)
    lcd.add_argument("--r", type=int, default=None)
    lcd.add_argument("--curve", default=None)
    lcd.add_argument("--G", default=None)
    lcd.add_argument("--allow-remark-family", action="store_true")
    add_common(lcd)
    lcd.set_defaults(func=cmd_code_lcd_check)
    mindist = code_sub.add_parser("mindist")
    mindist.add_argument("--curve", required=True)
    mindist.add_argument("--G", required=True)
    mindist.add_argument("--D", default="standard")
    mindist.add_argument("--budget", type=int, default=DEFAULT_MINDIST_BUDGET)
    add_common(mindist)
    mindist.set_defaults(func=cmd_code_mindist)

    verify = sub.add_parser("verify", help="bundled end-to-end checks")
    verify_sub = verify.add_subparsers(dest="what", required=True)
    pe = verify_sub.add_parser("paper-examples")
    pe.add_argument("--which", default="all")
    add_common(pe)
    pe.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
