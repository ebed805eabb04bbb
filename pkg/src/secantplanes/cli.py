"""Command-line front end.

    secantplanes nd --g 0 --m 4 --d-max 3
    secantplanes coeffs --d 2 --g 9 --m 10
    secantplanes nprime --a 2 --d 2
    secantplanes oracle --d 2 --g 3 --m 6
    secantplanes macdonald-rs --s 2 --g 1 --m 7
    secantplanes verify --suite all

Output goes to stdout as JSON (default) or CSV; diagnostics go to stderr.
Exit status: 0 when everything agrees, 1 on verification failures, 2 on
usage or parameter errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import closed_forms as cf
from . import oracle
from .series import secant_gf
from .suites import DEFAULT_BOUNDS, SUITES, run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def jsonable(obj):
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, oracle.GmPolynomial):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in obj]
    return str(obj)


# --- commands -----------------------------------------------------------------


def cmd_nd(args):
    if args.d_max < 0:
        raise UsageError("--d-max must be nonnegative")
    if args.g < 0:
        raise UsageError("--g must be nonnegative")
    series = secant_gf(args.g, args.m, args.d_max)
    rows, failures = [], []
    for d in range(args.d_max + 1):
        gf, closed = series[d], cf.nd_acgh(d, args.g, args.m)
        rows.append({"d": d, "nd_gf": gf, "nd_acgh": closed, "agree": gf == closed})
        if gf != closed:
            failures.append({"inputs": [d, args.g, args.m], "expected": closed, "actual": gf, "methods": ["nd_acgh", "nd_gf"]})
    return {"g": args.g, "m": args.m, "d_max": args.d_max}, rows, failures


def cmd_coeffs(args):
    d, g, m = args.d, args.g, args.m
    if d < 0 or g < 0:
        raise UsageError("need d >= 0 and g >= 0")
    values = {"p_c": cf.p_c, "p_alpha": cf.p_alpha, "p_beta": cf.p_beta}
    table = cf.tautological_coefficients(d, g, m)
    rows, failures = [], []
    for name, fn in values.items():
        try:
            value = fn(d, g, m)
        except cf.ConsistencyError as exc:
            failures.append({"inputs": [name, d, g, m], "expected": None, "actual": str(exc), "methods": sorted(table[name])})
            value = table[name].get("explicit")
        routes = table[name]
        rows.append(
            {
                "coefficient": name,
                "value": value,
                "explicit": routes.get("explicit"),
                "hypergeometric": routes.get("hypergeometric"),
                "generating_function": routes.get("generating_function"),
                "agree": len(set(routes.values())) == 1,
            }
        )
    s = 2 * d - 1
    by_name = {r["coefficient"]: r["value"] for r in rows}
    relation = 2 * m * by_name["p_alpha"] + (2 * g - 2) * by_name["p_beta"] + (s + 1) * by_name["p_c"]
    rows.append({"coefficient": "2m P_alpha + (2g-2) P_beta + (s+1) P_c, s=2d-1", "value": relation,
                 "explicit": relation, "hypergeometric": None, "generating_function": None, "agree": relation == 0})
    if relation != 0:
        failures.append({"inputs": [d, g, m], "expected": 0, "actual": relation, "methods": ["renormalization relation"]})
    return {"d": d, "g": g, "m": m}, rows, failures


def cmd_nprime(args):
    rows, failures = [], []
    if args.a is not None:
        if any(v is not None for v in (args.r, args.s, args.g, args.m)):
            raise UsageError("use either --a/--d or --d/--r/--s/--g/--m")
        if args.d is None:
            raise UsageError("--a needs --d")
        p = cf.RhoOneParams(args.a, args.d)
        sp = p.secant_params()
        A, Ap = cf.nd_acgh(sp.d, sp.g, sp.m), cf.nd_acgh(sp.d + 1, sp.g, sp.m + 1)
        routes = {
            "nprime_r1": cf.nprime_r1(p),
            "nprime_general": cf.nprime_general(sp, A, Ap),
            "tautological": cf.nprime_from_tautological(sp, A, Ap),
        }
        params = {"a": p.a, "d": p.d, "r": 1, "s": sp.s, "g": sp.g, "m": sp.m, "rho": sp.rho, "mu": sp.mu}
    else:
        missing = [n for n in ("d", "r", "s", "g", "m") if getattr(args, n) is None]
        if missing:
            raise UsageError("general form needs --" + ", --".join(missing))
        sp = cf.SecantParams(args.d, args.r, args.s, args.g, args.m)
        if args.A is None or args.Aprime is None:
            if sp.r != 1:
                raise UsageError("--A and --Aprime are required unless r = 1")
            A = cf.a_r1(sp.d, sp.g, sp.m)
            Ap = cf.nd_acgh(sp.d + 1, sp.g, sp.m + 1)
        else:
            A, Ap = Fraction(args.A), Fraction(args.Aprime)
        routes = {
            "nprime_general": cf.nprime_general(sp, A, Ap),
            "tautological": cf.nprime_from_tautological(sp, A, Ap),
        }
        params = {"d": sp.d, "r": sp.r, "s": sp.s, "g": sp.g, "m": sp.m, "rho": sp.rho, "mu": sp.mu}
    params.update({"A": A, "Aprime": Ap})
    reference = next(iter(routes.values()))
    for name, value in routes.items():
        rows.append({"route": name, "value": value, "agree": value == reference})
        if value != reference:
            failures.append({"inputs": params, "expected": reference, "actual": value, "methods": [next(iter(routes)), name]})
    return params, rows, failures


def cmd_oracle(args):
    poly = oracle.porteous_degree(args.d)
    value = oracle.nd_oracle(args.d, args.g, args.m)
    closed = cf.nd_acgh(args.d, args.g, args.m)
    rows = [{"d": args.d, "polynomial": str(poly), "degree": poly.evaluate(args.m, args.g), "nd_oracle": value,
             "nd_acgh": closed, "agree": value == closed}]
    failures = [] if value == closed else [
        {"inputs": [args.d, args.g, args.m], "expected": closed, "actual": value, "methods": ["nd_acgh", "nd_oracle"]}
    ]
    return {"d": args.d, "g": args.g, "m": args.m}, rows, failures


def cmd_macdonald_rs(args):
    s, g, m = args.s, args.g, args.m
    rows = [
        {"count": "Aprime", "value": cf.macdonald_rs_aprime(s, g, m), "rs_sign": cf.RS_SIGN,
         "meaning": f"{2 * s}-secant {s - 1}-planes, degree {m + 1} in P^{s + 1}"},
        {"count": "A", "value": cf.macdonald_rs_a(s, g, m), "rs_sign": cf.RS_SIGN,
         "meaning": f"{2 * s - 1}-secant {s - 1}-planes meeting a line, degree {m} in P^{s + 1}"},
    ]
    return {"s": s, "g": g, "m": m}, rows, []


_BOUND_FLAGS = ("d_max", "g_max", "m_max", "a_max", "n_max", "d_min", "order", "seed", "n_random", "weight_d_max")


def cmd_verify(args):
    given = {k: getattr(args, k) for k in _BOUND_FLAGS if getattr(args, k) is not None}
    if args.suite == "all":
        bounds = {name: {k: v for k, v in given.items() if k in DEFAULT_BOUNDS[name]} for name in SUITES}
        unused = [k for k in given if not any(k in DEFAULT_BOUNDS[n] for n in SUITES)]
        if unused:
            raise UsageError(f"no suite takes bound(s) {', '.join(unused)}")
    else:
        bounds = given
    report = run_suite(args.suite, bounds, threads=args.threads)
    reports = report.children or [report]
    rows = []
    for r in reports:
        rows.append({"suite": r.suite_name, "passed": r.passed, "cases_run": r.cases_run,
                     "failures": len(r.failures), "elapsed": round(r.elapsed, 3), "highlights": r.highlights})
    return {"suite": args.suite, "bounds": bounds, "threads": args.threads}, rows, report.failures


COMMANDS = {
    "nd": cmd_nd,
    "coeffs": cmd_coeffs,
    "nprime": cmd_nprime,
    "oracle": cmd_oracle,
    "macdonald-rs": cmd_macdonald_rs,
    "verify": cmd_verify,
}


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secantplanes", description="Exact secant-plane counts and identity checks.")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
        return p

    p = add("nd", "N_d(g, m) for d = 0..d-max by two routes")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d-max", type=int, default=5)

    p = add("coeffs", "P_alpha, P_beta, P_c for r = 1 by every available route")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("nprime", "series with exceptional secant planes, rho = 1, mu = -1")
    p.add_argument("--a", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--A", type=Fraction)
    p.add_argument("--Aprime", type=Fraction)

    p = add("oracle", "brute-force Porteous degree on C^d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("macdonald-rs", "r = s secant counts A and A'")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("verify", "run a verification suite")
    p.add_argument("--suite", choices=suite_names(), default="all")
    for flag in _BOUND_FLAGS:
        p.add_argument("--" + flag.replace("_", "-"), dest=flag, type=int)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    return parser


def render(fmt: str, command: str, params: dict, rows: list, failures: list) -> str:
    if fmt == "json":
        doc = {"command": command, "params": jsonable(params), "results": jsonable(rows), "failures": jsonable(failures)}
        return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
    buf = io.StringIO()
    keys = []
    for row in rows:
        for k in row:
            if k not in keys:
                keys.append(k)
    writer = csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n")
    writer.writerow(keys)
    for row in rows:
        cells = []
        for k in keys:
            v = jsonable(row.get(k))
            if isinstance(v, (list, dict)):
                v = json.dumps(v, ensure_ascii=False)
            elif isinstance(v, bool):
                v = "true" if v else "false"
            cells.append("" if v is None else v)
        writer.writerow(cells)
    for f in failures:
        print(f"failure: {json.dumps(jsonable(f), ensure_ascii=False)}", file=sys.stderr)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params, rows, failures = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except cf.ConsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(args.format, args.command, params, rows, failures))
    if failures:
        print(f"{len(failures)} verification failure(s)", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
