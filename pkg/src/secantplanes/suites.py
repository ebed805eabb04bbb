"""Named verification suites.

Each suite walks a grid of inputs, compares two or more independent
routes to the same number and records every disagreement.  A failing case
never stops the run.
"""
from __future__ import annotations

import itertools
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_forms as cf
from . import combinatorics as comb
from . import oracle
from .exact import binomial, pochhammer
from .series import (
    Series1,
    catalan_integral_closed_form,
    catalan_series,
    one_plus_4z,
    s1_derivative,
    s1_exp,
    s1_inverse,
    s1_log,
    s1_mul,
    s1_pow_rational,
    secant_gf,
    secant_gf_exponential,
)

__all__ = ["SuiteReport", "SUITES", "DEFAULT_BOUNDS", "run_suite", "suite_names"]


@dataclass
class SuiteReport:
    suite_name: str
    cases_run: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    highlights: list = field(default_factory=list)
    children: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, inputs, expected, actual, methods) -> bool:
        self.cases_run += 1
        ok = expected == actual
        if not ok:
            self.failures.append(
                {
                    "suite": self.suite_name,
                    "inputs": inputs,
                    "expected": expected,
                    "actual": actual,
                    "methods": list(methods),
                }
            )
        return ok

    def error(self, inputs, exc: Exception, methods) -> None:
        self.cases_run += 1
        self.failures.append(
            {
                "suite": self.suite_name,
                "inputs": inputs,
                "expected": None,
                "actual": f"{type(exc).__name__}: {exc}",
                "methods": list(methods),
            }
        )

    def to_dict(self) -> dict:
        return {
            "suite": self.suite_name,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 3),
            "highlights": self.highlights,
            "children": [c.to_dict() for c in self.children],
        }


DEFAULT_BOUNDS = {
    "gf_vs_acgh": {"d_max": 10, "g_max": 20, "m_max": 25},
    "oracle_vs_closed": {"d_max": 5, "g_max": 6, "m_max": 12},
    "lemma45": {"d_max": 5},
    "tree_identities": {"d_max": 7, "weight_d_max": 8},
    "hypergeom_vs_relations": {"d_max": 6, "g_max": 20, "m_max": 25, "n_random": 50, "seed": 1},
    "obveqn": {"d_max": 6, "g_max": 20, "m_max": 25},
    "nprime_consistency": {"a_max": 8, "d_max": 8, "n_random": 100, "seed": 7},
    "positivity": {"a_max": 10, "d_max": 10},
    "rs_specialization": {"g_max": 3, "m_max": 8},
    "series_identities": {"order": 30, "g_max": 8, "m_max": 12},
    "wz": {"n_max": 50},
    "asymptotics": {"d_min": 5, "d_max": 30},
}


# --- suite bodies ----------------------------------------------------------------


def _gf_vs_acgh(r: SuiteReport, b: dict) -> None:
    for g in range(b["g_max"] + 1):
        for m in range(1, b["m_max"] + 1):
            series = secant_gf(g, m, b["d_max"])
            for d in range(b["d_max"] + 1):
                r.check((d, g, m), cf.nd_acgh(d, g, m), series[d], ("nd_acgh", "nd_gf"))
                r.check((d, g, m), cf.nd_acgh(d + 1, g, m + 1), cf.aprime_r1(d, g, m), ("nd_acgh", "aprime_r1"))


def _oracle_vs_closed(r: SuiteReport, b: dict) -> None:
    for d in range(1, b["d_max"] + 1):
        poly = oracle.porteous_degree(d)
        r.check((d,), Fraction(1), poly.coefficient(d, 0), ("leading m^d", "porteous_degree"))
        for g in range(b["g_max"] + 1):
            for m in range(1, b["m_max"] + 1):
                r.check((d, g, m), cf.nd_acgh(d, g, m), poly.evaluate(m, g) / math.factorial(d), ("nd_acgh", "nd_oracle"))


def _lemma45(r: SuiteReport, b: dict) -> None:
    for d in range(2, b["d_max"] + 1):
        rep = oracle.lemma_report(d)
        r.check((d,), rep["expected"], rep["actual"], ("lemma closed form", "porteous_degree"))
        r.highlights.append({"d": d, "m_coefficient": rep["actual"][0], "gamma_coefficient": rep["actual"][1],
                             "abs": list(oracle.lemma_coefficients(d))})
    bad = oracle.exponential_formula_check(b["d_max"])
    r.check(("exponential formula", b["d_max"]), [], [n for n, _, _ in bad], ("log of oracle series", "linear forms"))


def _tree_identities(r: SuiteReport, b: dict) -> None:
    top = b["d_max"]
    for d in range(2, max(top, b["weight_d_max"]) + 1):
        expected = Fraction(math.factorial(2 * d - 2), math.factorial(d))
        try:
            r.check((d,), expected, comb.spanning_tree_weight_sum(d), ("(2d-2)!/d!", "tree enumeration"))
        except AssertionError as exc:
            r.error((d,), exc, ("(2d-2)!/d!", "tree enumeration"))
        r.check((d,), d ** (d - 2), comb.tree_count(d), ("Cayley", "Prüfer enumeration"))
        r.check((d,), comb.catalan(d - 1) * math.factorial(d - 1), expected, ("C(d-1)(d-1)!", "(2d-2)!/d!"))
        r.check((d,), comb.catalan(d - 1), len(comb.admissible_tuples(d)), ("Catalan", "admissible tuples"))
    for d in range(2, top + 1):
        for t in itertools.product(range(d), repeat=d - 1):
            if sum(t) != d - 1:
                continue
            lam = comb.Partition.from_entries(t)
            r.check(("phi", t), comb.phi_formula(lam, d), comb.phi_count(t), ("phi_formula", "phi_count"))
        weighted = Fraction(0)
        for lam in comb.partitions(d - 1):
            f = comb.a_lambda_formula(lam, d)
            r.check(("a_lambda", d, lam.parts), f, comb.a_lambda_count(lam, d), ("a_lambda_formula", "a_lambda_count"))
            w = 1
            for p in lam.parts:
                w *= math.factorial(p)
            weighted += f * w
        r.check(("weighted a_lambda", d), comb.spanning_tree_weight_sum(d), weighted, ("tree weight sum", "sum a_lambda weights"))


def _f32_transformation_cases(n_cases: int, seed: int):
    """Seeded terminating tuples (w, x, y, z, n) with both sides well defined."""
    rng = random.Random(seed)

    def ok_lower(v: Fraction) -> bool:
        return not (v.denominator == 1 and v <= 0)

    out = []
    while len(out) < n_cases:
        n = rng.randint(0, 6)
        w, x, y, z = (Fraction(rng.randint(-20, 20), rng.choice([1, 2, 3])) for _ in range(4))
        if ok_lower(y) and ok_lower(z) and ok_lower(-w - x + y + z):
            out.append((w, x, y, z, n))
    return out


def _f32_transformation(w, x, y, z, n) -> tuple[Fraction, Fraction]:
    lhs = cf.Hyp3F2((w, x, -n), (y, z)).value()
    rhs = (
        pochhammer(-w - x + y + z, n)
        / pochhammer(z, n)
        * cf.Hyp3F2((-w + y, -x + y, -n), (y, -w - x + y + z)).value()
    )
    return lhs, rhs


def _hypergeom_vs_relations(r: SuiteReport, b: dict) -> None:
    for d in range(1, b["d_max"] + 1):
        for g in range(b["g_max"] + 1):
            for m in range(1, b["m_max"] + 1):
                table = cf.tautological_coefficients(d, g, m)
                for name, routes in table.items():
                    names = sorted(routes)
                    for a, c in itertools.combinations(names, 2):
                        r.check((name, d, g, m), routes[a], routes[c], (a, c))
    for case in _f32_transformation_cases(b["n_random"], b["seed"]):
        lhs, rhs = _f32_transformation(*case)
        r.check(("3F2 transformation",) + case, lhs, rhs, ("3F2 left side", "3F2 right side"))


def _obveqn(r: SuiteReport, b: dict) -> None:
    for d in range(1, b["d_max"] + 1):
        s = 2 * d - 1
        for g in range(2, b["g_max"] + 1):
            for m in range(1, b["m_max"] + 1):
                pa, pb, pc = cf.p_alpha(d, g, m), cf.p_beta(d, g, m), cf.p_c(d, g, m)
                lhs = 2 * m * pa + (2 * g - 2) * pb + (s + 1) * pc
                r.check((d, g, m, s), Fraction(0), lhs, ("0", "2m Pa + (2g-2) Pb + (s+1) Pc"))
                # the second test-family relation
                rel = (-2 * m - 2 * g) * pa + (2 - 2 * g) * pb + (-m - 1) * pc
                r.check((d, g, m), (d + 1) * cf.aprime_r1(d, g, m), rel, ("(d+1) A'", "test-family relation"))


def _delta_cases(n_cases: int, seed: int):
    rng = random.Random(seed)
    out = []
    while len(out) < n_cases:
        n = rng.randint(1, 6)
        a = [rng.randint(-3, 10) for _ in range(n)]
        if all(a[i] + n - 1 - i >= 0 for i in range(n)):
            out.append(tuple(a))
    return out


def _nprime_consistency(r: SuiteReport, b: dict) -> None:
    for a in range(1, b["a_max"] + 1):
        for d in range(1, b["d_max"] + 1):
            p = cf.RhoOneParams(a, d)
            sp = p.secant_params()
            A, Ap = cf.nd_acgh(d, sp.g, sp.m), cf.nd_acgh(d + 1, sp.g, sp.m + 1)
            value = cf.nprime_r1(p)
            r.check((a, d), value, cf.nprime_general(sp, A, Ap), ("nprime_r1", "nprime_general"))
            r.check((a, d), value, cf.nprime_from_tautological(sp, A, Ap), ("nprime_r1", "P_alpha alpha + P_c c"))
            r.check((a, d), -A, cf.pc_ad(a, d), ("-N_d", "pc_ad"))
            r.check((a, d), cf.p_alpha(d, sp.g, sp.m) + cf.pc_ad(a, d) / 2, cf.palpha2_ad(a, d), ("P_alpha + P_c/2", "palpha2_ad"))
    for t in _delta_cases(b["n_random"], b["seed"]):
        r.check(("delta",) + t, cf.delta_det(t), cf.delta_product(t), ("delta_det", "delta_product"))
    g, m, s = 9, 10, 3
    q = g - m + s
    num = Fraction(1)
    for k in range(1, s + 1):
        num *= math.factorial(k)
    for k in range(q, q + s + 1):
        num /= math.factorial(k)
    r.check(("delta constant", g, m, s), num, cf.delta_det([q] * (s + 1)), ("s!...1!/((g-m+2s)!...(g-m+s)!)", "delta_det"))


def _positivity(r: SuiteReport, b: dict) -> None:
    for a in range(1, b["a_max"] + 1):
        for d in range(1, b["d_max"] + 1):
            v = cf.nprime_r1(cf.RhoOneParams(a, d))
            expected = "zero" if a == 1 or d == 1 else "positive"
            actual = "zero" if v == 0 else "positive" if v > 0 else "negative"
            r.check((a, d), expected, actual, ("vanishing rule", "nprime_r1 sign"))


def _rs_specialization(r: SuiteReport, b: dict) -> None:
    r.highlights.append({"rs_sign": cf.RS_SIGN})
    for g in range(b["g_max"] + 1):
        for m in range(3, b["m_max"] + 1):
            r.check((1, g, m), binomial(m, 2) - g, cf.macdonald_rs_aprime(1, g, m), ("plane node count", "macdonald_rs_aprime"))
            r.check((1, g, m), Fraction(m), cf.macdonald_rs_a(1, g, m), ("Bézout", "macdonald_rs_a"))
            # s = 1 through the r = 1 formulas as well
            r.check((1, g, m), cf.aprime_r1(1, g, m), cf.macdonald_rs_aprime(1, g, m), ("aprime_r1", "macdonald_rs_aprime"))
    for g in range(b["g_max"] + 1):
        for m in range(4, b["m_max"] + 1):
            n = m + 1
            four_secants = Fraction((n - 2) * (n - 3) ** 2 * (n - 4), 12) - Fraction(g * (n * n - 7 * n + 13 - g), 2)
            r.check((2, g, m), four_secants, cf.macdonald_rs_aprime(2, g, m), ("4-secant lines", "macdonald_rs_aprime"))
            trisecants = Fraction((m - 1) * (m - 2) * (m - 3), 3) - g * (m - 2)
            r.check((2, g, m), trisecants, cf.macdonald_rs_a(2, g, m), ("trisecants meeting a line", "macdonald_rs_a"))


def _series_identities(r: SuiteReport, b: dict) -> None:
    n = b["order"]
    c = catalan_series(n + 1)
    c_neg = c.scale_argument(-1).truncate(n)
    root = s1_pow_rational(one_plus_4z(n), Fraction(1, 2))
    closed = s1_mul(Series1.constant(2, n), s1_inverse(root + 1))
    r.check(("C(-z)", n), c_neg, closed, ("catalan_series(-z)", "2/((1+4z)^(1/2)+1)"))
    z = Series1.monomial(1, n)
    r.check(("C = 1 + zC^2", n), c.truncate(n), 1 + s1_mul(z, s1_mul(c.truncate(n), c.truncate(n))), ("C", "1 + zC^2"))
    deriv = s1_derivative(catalan_integral_closed_form(n + 1))
    r.check(("id1", n), -c_neg, deriv.truncate(n), ("-C(-z)", "d/dz closed form"))
    root_hi = s1_pow_rational(one_plus_4z(n + 1), Fraction(1, 2))
    quotient = Series1([-x / 2 for x in root_hi.coeffs[1:]], n)
    r.check(("id1 integrand", n), quotient, deriv.truncate(n), ("(1-(1+4z)^(1/2))/(2z)", "d/dz closed form"))
    sample = Series1([Fraction(0), Fraction(1, 2), Fraction(-3), Fraction(5, 7)], 10)
    r.check(("log exp",), sample, s1_log(s1_exp(sample)), ("a", "log(exp(a))"))
    order = min(n, 20)
    for g in range(b["g_max"] + 1):
        for m in range(1, b["m_max"] + 1):
            r.check(("exp form", g, m), secant_gf(g, m, order), secant_gf_exponential(g, m, order), ("secant_gf", "exponential form"))


def _wz(r: SuiteReport, b: dict) -> None:
    for n in range(2, b["n_max"] + 1):
        r.check((n,), Fraction(1), comb.wz_sum(n), ("1", "WZ sum"))


def _asymptotics(r: SuiteReport, b: dict) -> None:
    lo, hi = b["d_min"], b["d_max"]
    early = range(lo, min(15, hi) + 1)
    late = range(max(20, lo), hi + 1)
    for a in (2, 3):
        defects = {}
        for d in range(lo, hi + 1):
            p = cf.RhoOneParams(a, d)
            r.check((a, d), "positive", "positive" if cf.nprime_r1(p) > 0 else "not positive", ("positivity", "nprime_r1"))
            defects[d] = cf.nprime_asymptotic_defect(p)
        r.highlights.append({"a": a, "defects": {d: v for d, v in defects.items()}})
        if early and late:
            early_max = max(abs(defects[d]) for d in early)
            late_max = max(abs(defects[d]) for d in late)
            r.check(
                ("defect growth", a),
                "late max <= 2 * early max",
                "late max <= 2 * early max" if late_max <= 2 * early_max else f"late max {float(late_max):.4g} > 2 * {float(early_max):.4g}",
                ("O(1) remainder", "nprime_asymptotic_defect"),
            )


SUITES = {
    "gf_vs_acgh": _gf_vs_acgh,
    "oracle_vs_closed": _oracle_vs_closed,
    "lemma45": _lemma45,
    "tree_identities": _tree_identities,
    "hypergeom_vs_relations": _hypergeom_vs_relations,
    "obveqn": _obveqn,
    "nprime_consistency": _nprime_consistency,
    "positivity": _positivity,
    "rs_specialization": _rs_specialization,
    "series_identities": _series_identities,
    "wz": _wz,
    "asymptotics": _asymptotics,
}


def suite_names() -> list:
    return list(SUITES) + ["all"]


def _validate(name: str, bounds: dict | None) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    merged = dict(DEFAULT_BOUNDS[name])
    for key, value in (bounds or {}).items():
        if value is None:
            continue
        if key not in merged:
            raise ValueError(f"suite {name!r} has no bound {key!r}; known bounds: {', '.join(merged)}")
        merged[key] = int(value)
    for key, value in merged.items():
        if key != "seed" and value < 0:
            raise ValueError(f"bound {key} must be nonnegative")
    if name in ("oracle_vs_closed", "lemma45") and merged["d_max"] > oracle.oracle_cap():
        raise ValueError(
            f"d_max = {merged['d_max']} exceeds the oracle cap {oracle.oracle_cap()} (set SECANT_ORACLE_CAP to raise it)"
        )
    if name == "tree_identities":
        for key in ("d_max", "weight_d_max"):
            if merged[key] > comb.TREE_CAP:
                raise ValueError(f"{key} = {merged[key]} exceeds the tree enumeration cap {comb.TREE_CAP}")
    if name == "series_identities" and merged["order"] < 1:
        raise ValueError("order must be at least 1")
    return merged


def _run_one(name: str, bounds: dict | None) -> SuiteReport:
    merged = _validate(name, bounds)
    report = SuiteReport(name)
    report.highlights.append({"bounds": merged})
    start = time.perf_counter()
    try:
        SUITES[name](report, merged)
    except Exception as exc:  # a broken route is a finding, not a crash
        report.error(("suite aborted",), exc, (name,))
    report.elapsed = time.perf_counter() - start
    return report


def run_suite(name: str, bounds: dict | None = None, threads: int | None = None) -> SuiteReport:
    """Run one named suite, or every suite for ``name == "all"``.

    For ``"all"``, ``bounds`` may map suite names to bound overrides.
    ``threads > 1`` runs the suites of ``"all"`` in worker processes; the
    report order is the fixed suite order either way.
    """
    if name != "all":
        return _run_one(name, bounds)
    overrides = bounds or {}
    unknown = set(overrides) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s) in bounds: {', '.join(sorted(unknown))}")
    for key in SUITES:
        _validate(key, overrides.get(key))
    start = time.perf_counter()
    workers = threads if threads is not None else (os.cpu_count() or 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(SUITES))) as pool:
            futures = [pool.submit(_run_one, key, overrides.get(key)) for key in SUITES]
            children = [f.result() for f in futures]
    else:
        children = [_run_one(key, overrides.get(key)) for key in SUITES]
    total = SuiteReport("all", children=children)
    for child in children:
        total.cases_run += child.cases_run
        total.failures.extend(child.failures)
    total.elapsed = time.perf_counter() - start
    return total
