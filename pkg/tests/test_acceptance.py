"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (visible with
``pytest -v``) and then asserts the same condition at the stated
tolerance.  All comparisons are exact.
"""
import math
import random
import time
from fractions import Fraction

import pytest

from secantplanes import closed_forms as cf
from secantplanes import combinatorics as comb
from secantplanes import oracle
from secantplanes.exact import binomial, pochhammer
from secantplanes.series import (
    Series1,
    catalan_integral_closed_form,
    catalan_series,
    one_plus_4z,
    s1_derivative,
    s1_inverse,
    s1_mul,
    s1_pow_rational,
    secant_gf,
)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        return ok

    return emit


def test_criterion_01_gf_equals_closed_form(report):
    start = time.perf_counter()
    bad = []
    for g in range(21):
        for m in range(26):
            series = secant_gf(g, m, 10)
            bad += [(d, g, m) for d in range(11) if series[d] != cf.nd_acgh(d, g, m)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    report(1, ok, f"nd_gf = nd_acgh on d<=10, g<=20, m<=25; {len(bad)} mismatches; {elapsed:.1f}s")
    assert ok, bad[:5]


def test_criterion_02_oracle_equals_closed_form(report):
    start = time.perf_counter()
    bad = [
        (d, g, m)
        for d in range(1, 6)
        for g in range(7)
        for m in range(13)
        if oracle.nd_oracle(d, g, m) != cf.nd_acgh(d, g, m)
    ]
    elapsed = time.perf_counter() - start
    six = [(0, 10), (3, 12), (6, 11)]
    bad6 = [(6, g, m) for g, m in six if oracle.nd_oracle(6, g, m) != cf.nd_acgh(6, g, m)]
    ok = not bad and not bad6 and elapsed < 60
    report(2, ok, f"nd_oracle = nd_acgh on d<=5 ({elapsed:.1f}s) and at 3 points with d=6")
    assert ok, bad[:5] + bad6


def test_criterion_03_classical_anchors(report):
    got = (cf.nd_acgh(2, 0, 4), cf.nd_acgh(3, 0, 4), cf.nd_acgh(2, 3, 6))
    ok = got == (3, 0, 7)
    report(3, ok, f"N_2(0,4), N_3(0,4), N_2(3,6) = {tuple(map(int, got))}")
    assert ok


def test_criterion_04_lemma_coefficients(report):
    rows = []
    for d in range(2, 6):
        rows.append(oracle.lemma_coefficients(d) == oracle.lemma_expected(d))
    ok = all(rows)
    report(4, ok, "|[m]| and |[gamma]| of porteous_degree(d), 2<=d<=5")
    assert ok


def test_criterion_05_tree_identities(report):
    start = time.perf_counter()
    ok_sum = all(
        comb.spanning_tree_weight_sum(d) == Fraction(math.factorial(2 * d - 2), math.factorial(d)) for d in range(2, 9)
    )
    ok_phi = True
    ok_a = True
    for d in range(2, 8):
        for lam in comb.partitions(d - 1):
            if lam.k > d - 1:
                continue
            t = lam.padded(d - 1)
            ok_phi &= comb.phi_count(t) == comb.phi_formula(lam, d)
            ok_a &= comb.a_lambda_count(lam, d) == comb.a_lambda_formula(lam, d)
    elapsed = time.perf_counter() - start
    ok = ok_sum and ok_phi and ok_a and elapsed < 60
    report(5, ok, f"weight sum d<=8, phi and a_lambda d<=7; {elapsed:.1f}s")
    assert ok


def test_criterion_06_tautological_triple_agreement(report):
    triple_points = 0
    bad = []
    for d in range(1, 7):
        for g in range(21):
            for m in range(26):
                table = cf.tautological_coefficients(d, g, m)
                if all(len(r) == 3 for r in table.values()):
                    triple_points += 1
                for name, routes in table.items():
                    if len(set(routes.values())) > 1:
                        bad.append((name, d, g, m))
                if g >= 2:
                    s = 2 * d - 1
                    pa, pb, pc = cf.p_alpha(d, g, m), cf.p_beta(d, g, m), cf.p_c(d, g, m)
                    if 2 * m * pa + (2 * g - 2) * pb + (s + 1) * pc != 0:
                        bad.append(("renormalization", d, g, m))
    ok = not bad and triple_points > 0
    report(6, ok, f"3 routes agree at {triple_points} full points, renormalization relation holds; {len(bad)} mismatches")
    assert ok, bad[:5]


def test_criterion_07_nprime(report):
    start = time.perf_counter()
    bad = []
    for a in range(1, 9):
        for d in range(1, 9):
            p = cf.RhoOneParams(a, d)
            sp = p.secant_params()
            general = cf.nprime_general(sp, cf.nd_acgh(d, sp.g, sp.m), cf.nd_acgh(d + 1, sp.g, sp.m + 1))
            if cf.nprime_r1(p) != general:
                bad.append(("routes", a, d))
    for a in range(1, 11):
        for d in range(1, 11):
            v = cf.nprime_r1(cf.RhoOneParams(a, d))
            if (a == 1 or d == 1) and v != 0:
                bad.append(("zero", a, d))
            if a >= 2 and d >= 2 and not v > 0:
                bad.append(("positive", a, d))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10
    report(7, ok, f"N' routes agree for a,d<=8, vanishing and positivity for a,d<=10; {elapsed:.1f}s")
    assert ok, bad[:5]


def test_criterion_08_rs_specialization(report):
    ok_ap = all(cf.macdonald_rs_aprime(1, g, m) == binomial(m, 2) - g for g in range(4) for m in range(3, 9))
    ok_a = all(cf.macdonald_rs_a(1, 0, m) == m for m in range(3, 9))
    ok = ok_ap and ok_a
    report(8, ok, f"r=s at s=1 with overall sign {cf.RS_SIGN}")
    assert ok


def test_criterion_09_series_identities(report):
    n = 30
    c_neg = catalan_series(n).scale_argument(-1)
    root = s1_pow_rational(one_plus_4z(n), Fraction(1, 2))
    ok_c = c_neg == s1_mul(Series1.constant(2, n), s1_inverse(root + 1))
    root_hi = s1_pow_rational(one_plus_4z(n + 1), Fraction(1, 2))
    integrand = Series1([-x / 2 for x in root_hi.coeffs[1:]], n)
    deriv = s1_derivative(catalan_integral_closed_form(n + 1))
    ok_id1 = deriv == integrand == -c_neg
    ok_wz = all(comb.wz_identity_check(k) for k in range(2, 51))

    rng = random.Random(2024)
    checked, ok_f32 = 0, True

    def fine(v):
        return not (v.denominator == 1 and v <= 0)

    while checked < 50:
        k = rng.randint(0, 6)
        w, x, y, z = (Fraction(rng.randint(-20, 20), rng.choice([1, 2, 3])) for _ in range(4))
        if not (fine(y) and fine(z) and fine(-w - x + y + z)):
            continue
        lhs = cf.Hyp3F2((w, x, -k), (y, z)).value()
        rhs = pochhammer(-w - x + y + z, k) / pochhammer(z, k) * cf.Hyp3F2((-w + y, -x + y, -k), (y, -w - x + y + z)).value()
        ok_f32 &= lhs == rhs
        checked += 1
    ok = ok_c and ok_id1 and ok_wz and ok_f32
    report(9, ok, f"C(-z) {ok_c}, integral identity {ok_id1}, WZ {ok_wz}, 3F2 transformation {ok_f32}")
    assert ok


@pytest.mark.parametrize("a", [2, 3])
def test_criterion_10_asymptotic_defect_bounded(report, a):
    start = time.perf_counter()
    defect = {d: cf.nprime_asymptotic_defect(cf.RhoOneParams(a, d)) for d in range(5, 31)}
    early = max(abs(defect[d]) for d in range(5, 16))
    late = max(abs(defect[d]) for d in range(20, 31))
    elapsed = time.perf_counter() - start
    ok = late <= 2 * early and elapsed < 30
    report(f"10 (a={a})", ok, f"max|defect| d in 20..30 = {float(late):.1f}, 2 x max d in 5..15 = {float(2 * early):.1f}")
    assert ok
