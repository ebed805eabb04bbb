import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from secantplanes import closed_forms as cf
from secantplanes.exact import binomial


def test_nd_acgh_anchors():
    assert cf.nd_acgh(2, 0, 4) == 3
    assert cf.nd_acgh(3, 0, 4) == 0
    assert cf.nd_acgh(2, 3, 6) == 7
    for g in range(11):
        for m in range(1, 11):
            assert cf.nd_acgh(1, g, m) == m


def test_nd_gf_matches():
    assert cf.nd_gf(0, 5, 3) == 1
    assert cf.nd_gf(2, 0, 4) == 3
    assert cf.nd_gf(3, 0, 4) == 0
    for d in range(8):
        for g in range(9):
            for m in range(1, 14):
                assert cf.nd_gf(d, g, m) == cf.nd_acgh(d, g, m)


def test_aprime_and_a():
    assert cf.aprime_r1(1, 0, 3) == 3
    assert cf.aprime_r1(1, 3, 5) == 7
    # a rational quintic in P^4 has exactly one trisecant line; the oracle agrees
    assert cf.aprime_r1(2, 0, 4) == 1
    assert cf.a_r1(2, 0, 4) == 3
    assert cf.a_r1(1, 4, 9) == 9
    assert cf.a_r1(2, 3, 6) == 7
    for d in range(6):
        for g in range(8):
            for m in range(1, 12):
                assert cf.aprime_r1(d, g, m) == cf.nd_acgh(d + 1, g, m + 1)


def test_params():
    p = cf.SecantParams(d=3, r=2, s=2, g=7, m=7)
    assert (p.mu, p.rho) == (-1, 1)
    q = cf.RhoOneParams(2, 2)
    sp = q.secant_params()
    assert (sp.g, sp.m, sp.s, sp.r) == (9, 10, 3, 1)
    assert (sp.rho, sp.mu) == (1, -1)
    with pytest.raises(ValueError):
        cf.SecantParams(d=2, r=3, s=2, g=1, m=1)


def test_f32_basic():
    assert cf.Hyp3F2((0, 5, 7), (2, 3)).value() == 1
    assert cf.f3_2(cf.Hyp3F2((1, 1, -1), (1, 1))) == 0
    with pytest.raises(ValueError):
        cf.Hyp3F2((Fraction(1, 2), 1, 2), (1, 1))
    with pytest.raises(ValueError):
        cf.Hyp3F2((-3, 1, 1), (-1, 1))
    # Chu-Vandermonde as a 2F1 hidden in a 3F2 with a cancelling pair
    n, a, c = 5, Fraction(2, 3), Fraction(7, 2)
    from secantplanes.exact import pochhammer
    assert cf.Hyp3F2((-n, a, 4), (c, 4)).value() == pochhammer(c - a, n) / pochhammer(c, n)


def test_f32_transformation_seeded():
    rng = random.Random(11)
    done = 0
    from secantplanes.exact import pochhammer

    def ok(v):
        return not (v.denominator == 1 and v <= 0)

    while done < 50:
        n = rng.randint(0, 6)
        w, x, y, z = (Fraction(rng.randint(-20, 20), rng.choice([1, 2, 3])) for _ in range(4))
        if not (ok(y) and ok(z) and ok(-w - x + y + z)):
            continue
        lhs = cf.Hyp3F2((w, x, -n), (y, z)).value()
        rhs = pochhammer(-w - x + y + z, n) / pochhammer(z, n) * cf.Hyp3F2((-w + y, -x + y, -n), (y, -w - x + y + z)).value()
        assert lhs == rhs
        done += 1


def test_tautological_examples():
    assert cf.p_c(2, 3, 6) == -7
    assert (cf.p_alpha(2, 9, 10), cf.p_beta(2, 9, 10), cf.p_c(2, 9, 10)) == (7, -2, -27)
    d, g, m, s = 2, 9, 10, 3
    assert 2 * m * cf.p_alpha(d, g, m) + (2 * g - 2) * cf.p_beta(d, g, m) + (s + 1) * cf.p_c(d, g, m) == 0


def test_tautological_routes_present():
    t = cf.tautological_coefficients(2, 9, 10)
    assert all(len(routes) == 3 for routes in t.values())
    t = cf.tautological_coefficients(1, 0, 5)
    assert "explicit" not in t["p_alpha"]
    assert set(t["p_c"]) >= {"explicit", "generating_function"}


def test_explicit_route_errors_are_named():
    with pytest.raises(ValueError, match="2g"):
        cf.p_alpha(1, 0, 5)
    with pytest.raises(ValueError, match="g-1"):
        cf.p_beta(1, 1, 5)


def test_three_routes_agree_on_grid():
    for d in range(1, 5):
        for g in range(0, 14):
            for m in range(1, 18):
                for name, routes in cf.tautological_coefficients(d, g, m).items():
                    assert len(set(routes.values())) == 1, (name, d, g, m, routes)


def test_test_family_relation():
    for d in range(1, 5):
        for g in range(2, 12):
            for m in range(1, 16):
                pa, pb, pc = cf.p_alpha(d, g, m), cf.p_beta(d, g, m), cf.p_c(d, g, m)
                assert (-2 * m - 2 * g) * pa + (2 - 2 * g) * pb + (-m - 1) * pc == (d + 1) * cf.aprime_r1(d, g, m)
                assert 2 * m * pa + (2 * g - 2) * pb + 2 * d * pc == 0


def test_delta():
    g, m, s = 9, 10, 3
    q = g - m + s
    assert cf.delta_det([q] * (s + 1)) == Fraction(6 * 2 * 1, 120 * 24 * 6 * 2)
    assert cf.delta_det([0]) == 1
    assert cf.delta_det([-1]) == 0
    with pytest.raises(ValueError):
        cf.delta_product([-2, 0])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=-3, max_value=9), min_size=1, max_size=5))
def test_delta_det_equals_product(a):
    n = len(a)
    a = [max(x, i + 1 - n) for i, x in enumerate(a)]
    assert cf.delta_product(a) == cf.delta_det(a)


def test_nprime_r1_frozen_values():
    assert cf.nprime_r1(cf.RhoOneParams(2, 2)) == 504
    assert cf.nprime_r1(cf.RhoOneParams(3, 2)) == 61776
    for d in range(1, 9):
        assert cf.nprime_r1(cf.RhoOneParams(1, d)) == 0
    for a in range(1, 9):
        assert cf.nprime_r1(cf.RhoOneParams(a, 1)) == 0
    assert cf.pc_ad(4, 1) == -(4 + 2)


def test_nprime_routes_agree():
    for a in range(1, 6):
        for d in range(1, 6):
            p = cf.RhoOneParams(a, d)
            sp = p.secant_params()
            A, Ap = cf.nd_acgh(d, sp.g, sp.m), cf.nd_acgh(d + 1, sp.g, sp.m + 1)
            v = cf.nprime_r1(p)
            assert v == cf.nprime_general(sp, A, Ap) == cf.nprime_from_tautological(sp, A, Ap)
            assert v.denominator == 1


def test_nprime_general_preconditions():
    with pytest.raises(ValueError, match="rho"):
        cf.nprime_general(cf.SecantParams(2, 2, 2, 7, 9), 1, 1)
    with pytest.raises(ValueError, match="mu"):
        cf.nprime_general(cf.SecantParams(2, 1, 2, 4, 5), 1, 1)
    p = cf.SecantParams(3, 2, 2, 7, 7)
    assert cf.nprime_general(p, 5, 3) == cf.nprime_from_tautological(p, 5, 3)


def test_nprime_general_is_linear():
    p = cf.SecantParams(3, 2, 2, 7, 7)
    base = cf.nprime_general(p, 0, 0)
    assert base == 0
    assert cf.nprime_general(p, 2, 6) == 2 * cf.nprime_general(p, 1, 0) + 6 * cf.nprime_general(p, 0, 1)


def test_rs_specialization():
    assert cf.macdonald_rs_aprime(1, 0, 3) == 3
    assert cf.macdonald_rs_aprime(1, 1, 4) == 5
    for g in range(4):
        for m in range(3, 9):
            assert cf.macdonald_rs_aprime(1, g, m) == binomial(m, 2) - g
    for m in range(3, 9):
        assert cf.macdonald_rs_a(1, 0, m) == m


def test_rs_s2_classical_counts():
    for g in range(3):
        for m in range(4, 9):
            n = m + 1
            four = Fraction((n - 2) * (n - 3) ** 2 * (n - 4), 12) - Fraction(g * (n * n - 7 * n + 13 - g), 2)
            assert cf.macdonald_rs_aprime(2, g, m) == four
            assert cf.macdonald_rs_a(2, g, m) == Fraction((m - 1) * (m - 2) * (m - 3), 3) - g * (m - 2)


def test_asymptotic_defect_a2_is_linear():
    # the printed expansion leaves a linear remainder; for a = 2 it is exactly 6d
    for d in range(2, 12):
        assert cf.nprime_asymptotic_defect(cf.RhoOneParams(2, d)) == 6 * d


def test_asymptotic_corrected_linear_term_is_bounded():
    for a in (2, 3, 4):
        vals = [cf.nprime_asymptotic_defect(cf.RhoOneParams(a, d)) - (4 * a * a - 5 * a) * d for d in range(5, 31)]
        assert max(abs(v) for v in vals) < 4 * a * a
