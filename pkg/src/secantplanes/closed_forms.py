"""Closed formulas for secant-plane counts and tautological coefficients.

Conventions used throughout:

* ``N_d(g, m)`` is the number of d-secant (d-2)-planes to a
  ``g^{2d-2}_m`` on a curve of genus ``g``; ``N_0 = 1`` and ``N_1 = m``.
* For ``r = 1`` the secant-plane count along a one-parameter family is
  ``P_alpha alpha + P_beta beta + P_c c``; the coefficients are exposed in
  three independent forms (explicit relations, terminating 3F2 sums,
  generating functions) that are required to agree.
* ``rho = g - (s+1)(g-m+s)`` and ``mu = d - r(s+1-d+r)``.

All results are exact :class:`~fractions.Fraction` values.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    as_rational,
    binomial,
    factorial,
    falling,
    is_nonpositive_integer,
)
from .series import Series1, one_plus_4z, s1_inverse, s1_mul, s1_pow_rational, s2_build_and_extract, secant_gf

__all__ = [
    "ConsistencyError",
    "SecantParams",
    "RhoOneParams",
    "Hyp3F2",
    "f3_2",
    "nd_acgh",
    "nd_gf",
    "aprime_r1",
    "a_r1",
    "p_c",
    "p_alpha",
    "p_beta",
    "tautological_coefficients",
    "delta_det",
    "delta_product",
    "nprime_general",
    "nprime_from_tautological",
    "nprime_r1",
    "pc_ad",
    "palpha2_ad",
    "RS_SIGN",
    "macdonald_rs_aprime",
    "macdonald_rs_a",
    "asymptotic_prefactor",
    "nprime_asymptotic_defect",
]


class ConsistencyError(ArithmeticError):
    """Two routes to the same quantity disagreed."""


@dataclass(frozen=True)
class SecantParams:
    d: int
    r: int
    s: int
    g: int
    m: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("incidence d must be at least 1")
        if not 1 <= self.r <= self.s:
            raise ValueError("need 1 <= r <= s")
        if self.g < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def mu(self) -> int:
        return self.d - self.r * (self.s + 1 - self.d + self.r)

    @property
    def rho(self) -> int:
        return self.g - (self.s + 1) * (self.g - self.m + self.s)


@dataclass(frozen=True)
class RhoOneParams:
    """The r = 1, rho = 1 family indexed by positive integers ``a`` and ``d``."""

    a: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.d < 1:
            raise ValueError("a and d must be positive")

    @property
    def g(self) -> int:
        return 2 * self.a * self.d + 1

    @property
    def m(self) -> int:
        return (self.a + 1) * (2 * self.d - 1) + 1

    @property
    def s(self) -> int:
        return 2 * self.d - 1

    def secant_params(self) -> SecantParams:
        return SecantParams(d=self.d, r=1, s=self.s, g=self.g, m=self.m)


# --- terminating hypergeometric series -------------------------------------


@dataclass(frozen=True)
class Hyp3F2:
    """``3F2[upper; lower | 1]`` with a nonpositive-integer upper parameter."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(as_rational(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(as_rational(b) for b in self.lower))
        if len(self.upper) != 3 or len(self.lower) != 2:
            raise ValueError("3F2 needs three upper and two lower parameters")
        n = self.terms()
        if n is None:
            raise ValueError("3F2 does not terminate: no nonpositive integer upper parameter")
        for b in self.lower:
            if is_nonpositive_integer(b) and -b < n:
                raise ValueError(f"lower parameter {b} vanishes inside the terminating range")

    def terms(self) -> int | None:
        """Index of the last possibly nonzero term."""
        stops = [-int(u) for u in self.upper if is_nonpositive_integer(u)]
        return min(stops) if stops else None

    def value(self) -> Fraction:
        return f3_2(self)


def f3_2(h: Hyp3F2) -> Fraction:
    n = h.terms()
    total = Fraction(0)
    term = Fraction(1)
    for k in range(n + 1):
        total += term
        if k == n:
            break
        den = (k + 1)
        num = Fraction(1)
        for u in h.upper:
            num *= u + k
        for b in h.lower:
            if b + k == 0:
                raise ZeroDivisionError(f"lower parameter {b} hits zero at term {k + 1} of {n}")
            den *= b + k
        term = term * num / den
    return total


# --- N_d and the r = 1 classical counts -------------------------------------


def nd_acgh(d: int, g: int, m: int) -> Fraction:
    """Alternating binomial sum for N_d(g, m)."""
    if d < 0 or g < 0:
        raise ValueError("need d >= 0 and g >= 0")
    top = g + 2 * d - 2 - m
    return sum(
        ((-1) ** a * binomial(top, a) * binomial(g, d - a) for a in range(d + 1)),
        Fraction(0),
    )


def nd_gf(d: int, g: int, m: int) -> Fraction:
    """N_d(g, m) read off the generating function."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return secant_gf(g, m, d)[d]


def aprime_r1(d: int, g: int, m: int) -> Fraction:
    """(d+1)-secant (d-1)-planes to a degree-(m+1), genus-g curve in P^{2d}."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    top = g + 2 * d - (m + 1)
    return sum(
        ((-1) ** a * binomial(top, a) * binomial(g, d + 1 - a) for a in range(d + 2)),
        Fraction(0),
    )


def a_r1(d: int, g: int, m: int) -> Fraction:
    """d-secant (d-1)-planes in P^{2d} meeting a line; equal to N_d(g, m).

    Projecting from the line identifies these with d-secant
    (d-2)-planes in P^{2d-2}.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    return nd_acgh(d, g, m)


# --- tautological coefficients for r = 1 -------------------------------------


def _explicit(d: int, g: int, m: int) -> dict:
    out = {"p_c": -nd_acgh(d, g, m)}
    if g >= 1:
        out["p_alpha"] = Fraction(m + 1 - 2 * d, 2 * g) * nd_acgh(d, g, m) - Fraction(
            d + 1, 2 * g
        ) * nd_acgh(d + 1, g, m + 1)
        if g >= 2:
            out["p_beta"] = (-m * out["p_alpha"] + d * nd_acgh(d, g, m)) / (g - 1)
    return out


def _fact_ratio(num: Sequence[int], den: Sequence[int]) -> Fraction | None:
    if any(x < 0 for x in list(num) + list(den)):
        return None
    out = Fraction(1)
    for x in num:
        out *= factorial(x)
    for x in den:
        out /= factorial(x)
    return out


def _f32_or_none(upper, lower) -> Fraction | None:
    try:
        return Hyp3F2(upper, lower).value()
    except ValueError:
        # a lower parameter vanishes before the series terminates
        return None


def _hypergeometric(d: int, g: int, m: int) -> dict:
    out = {}
    half = Fraction(g, 2)
    u1 = -half + Fraction(m, 2) + 1 - d
    u2 = -half + Fraction(m + 3, 2) - d
    base = _fact_ratio([g, 2 * g - 2 - m], [g - 2 * d, d, 2 * g - 2 - m + d])
    f_main = _f32_or_none((u1, u2, -d), (Fraction(g + 1, 2) - d, half + 1 - d))
    if base is not None and f_main is not None:
        out["p_c"] = -base * f_main
        second = _fact_ratio([g - 1, 2 * g - 2 - m], [g - 2 * d - 1, d, 2 * g - 2 - m + d])
        f_aux = _f32_or_none((u1, -half + Fraction(m + 1, 2) - d, -d), (Fraction(g + 1, 2) - d, half - d))
        if second is not None and f_aux is not None:
            out["p_alpha"] = base / 2 * f_main - second / 2 * f_aux
    if d >= 1 and g >= 2:
        b1 = _fact_ratio([g - 2, 2 * g - 2 - m], [g - 2 * d, d - 1, 2 * g - 3 - m + d])
        b2 = _fact_ratio([g - 1, 2 * g - 1 - m], [g + 1 - 2 * d, d - 1, 2 * g - 2 - m + d])
        f1 = _f32_or_none((u1, u2, 1 - d), (Fraction(g + 1, 2) - d, half + 1 - d))
        f2 = _f32_or_none((u1, u2, 1 - d), (half + 1 - d, Fraction(g + 3, 2) - d))
        if None not in (b1, b2, f1, f2):
            out["p_beta"] = 2 * b1 * f1 - 2 * b2 * f2
    return out


@functools.lru_cache(maxsize=None)
def _gf_series(g: int, m: int, order: int) -> tuple[Series1, Series1]:
    z_gm = secant_gf(g, m, order)
    root = s1_pow_rational(one_plus_4z(order), Fraction(1, 2))
    alpha_factor = Fraction(1, 2) - s1_inverse(root) / 2
    zed = Series1.monomial(1, order)
    beta_factor = s1_mul(2 * zed, s1_inverse(one_plus_4z(order))) - s1_mul(
        4 * zed, s1_inverse(s1_mul(root, root + 1))
    )
    return s1_mul(z_gm, alpha_factor), s1_mul(z_gm, beta_factor)


def _generating(d: int, g: int, m: int) -> dict:
    alpha, beta = _gf_series(g, m, d)
    return {"p_c": -secant_gf(g, m, d)[d], "p_alpha": alpha[d], "p_beta": beta[d]}


_ROUTES = {
    "explicit": _explicit,
    "hypergeometric": _hypergeometric,
    "generating_function": _generating,
}


def tautological_coefficients(d: int, g: int, m: int) -> dict:
    """Every available route for P_c, P_alpha, P_beta.

    Returns ``{name: {route: value}}``; a route is absent where its
    formula is undefined (division by ``2g`` or ``g-1``, or a factorial of
    a negative integer in the hypergeometric prefactor).
    """
    if d < 0 or g < 0:
        raise ValueError("need d >= 0 and g >= 0")
    table = {"p_c": {}, "p_alpha": {}, "p_beta": {}}
    for route, fn in _ROUTES.items():
        for name, value in fn(d, g, m).items():
            table[name][route] = value
    return table


def _reconciled(name: str, d: int, g: int, m: int, requirement: str) -> Fraction:
    routes = tautological_coefficients(d, g, m)[name]
    if "explicit" not in routes:
        raise ValueError(f"{name}({d}, {g}, {m}): explicit relation needs {requirement}")
    value = routes["explicit"]
    for route, other in routes.items():
        if other != value:
            raise ConsistencyError(f"{name}({d}, {g}, {m}): {route} gives {other}, explicit gives {value}")
    return value


def p_c(d: int, g: int, m: int) -> Fraction:
    return _reconciled("p_c", d, g, m, "nothing")


def p_alpha(d: int, g: int, m: int) -> Fraction:
    return _reconciled("p_alpha", d, g, m, "g >= 1 (division by 2g)")


def p_beta(d: int, g: int, m: int) -> Fraction:
    return _reconciled("p_beta", d, g, m, "g >= 2 (division by g-1)")


# --- Brill-Noether determinants and N' ---------------------------------------


def _inv_factorial(n: int) -> Fraction:
    return Fraction(0) if n < 0 else 1 / factorial(n)


def _det(rows: list[list[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / a[col][col]
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def delta_det(a: Sequence[int]) -> Fraction:
    """det of the matrix with (i, j) entry 1/(a_i + j - i)!, 1/(negative)! = 0."""
    n = len(a)
    rows = [[_inv_factorial(a[i] + j - i) for j in range(n)] for i in range(n)]
    return _det(rows)


def delta_product(a: Sequence[int]) -> Fraction:
    """Product form ``prod_{i<j} (a_i - a_j - i + j) / prod_i (a_i + n - i)!``.

    Indices start at 1.  Requires every ``a_i + n - i >= 0``.
    """
    n = len(a)
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, n + 1):
        arg = a[i - 1] + n - i
        if arg < 0:
            raise ValueError(f"factorial argument a_{i} + n - {i} = {arg} is negative")
        den *= factorial(arg)
        for j in range(i + 1, n + 1):
            num *= a[i - 1] - a[j - 1] - i + j
    value = num / den
    if __debug__ and value != delta_det(a):
        raise ConsistencyError(f"product form disagrees with determinant for {tuple(a)}")
    return value


def _check_rho_one(p: SecantParams) -> None:
    if p.rho != 1:
        raise ValueError(f"need rho = 1, got rho = {p.rho}")
    if p.mu != -1:
        raise ValueError(f"need mu = -1, got mu = {p.mu}")
    q = p.g - p.m + p.s
    if q < 0:
        raise ValueError(f"factorial argument g - m + s = {q} is negative")
    if p.g < 1:
        raise ValueError("need g >= 1")


def nprime_general(p: SecantParams, A, Aprime) -> Fraction:
    """Series with exceptional secant planes on a general curve, rho = 1, mu = -1.

    ``A`` counts d-secant (d-r)-planes to a degree-m curve in P^{s+1}
    meeting a general line; ``Aprime`` counts (d+1)-secant (d-r)-planes to
    a degree-(m+1) curve in P^{s+1}.
    """
    _check_rho_one(p)
    d, s, g, m = p.d, p.s, p.g, p.m
    A, Aprime = as_rational(A), as_rational(Aprime)
    q = g - m + s
    pref = factorial(g - 1)
    for k in range(1, s + 1):
        pref *= factorial(k)
    for k in range(q, q + s):
        pref /= factorial(k)
    pref /= factorial(q + s + 1)
    coeff_a = -g * m + 2 * g * s + m * m - 3 * m * s + 2 * s * s - m + s + g
    coeff_ap = g * d + g - m * d - m + 2 * s * d + 2 * s + d + 1
    return pref * (coeff_a * A + coeff_ap * Aprime)


def nprime_from_tautological(p: SecantParams, A, Aprime) -> Fraction:
    """Same count assembled as ``P_alpha alpha + P_c c`` on the family over W^s_m.

    ``alpha = -2 g! Delta(q, ..., q)`` and ``c = -g! Delta(q+1, q, ..., q)`` with
    ``q = g - m + s``; the coefficients come from the two test families:
    ``P_c = -A`` and ``P_alpha = ((m-s) A - (d+1) A') / (2g)``.
    """
    _check_rho_one(p)
    d, s, g, m = p.d, p.s, p.g, p.m
    A, Aprime = as_rational(A), as_rational(Aprime)
    q = g - m + s
    alpha = -2 * factorial(g) * delta_det([q] * (s + 1))
    c = -factorial(g) * delta_det([q + 1] + [q] * s)
    pa = ((m - s) * A - (d + 1) * Aprime) / (2 * g)
    return pa * alpha + (-A) * c


def pc_ad(a: int, d: int) -> Fraction:
    """P_c on the rho = 1, r = 1 family as a finite sum."""
    k = (2 * a - 2) * d
    total = Fraction(0)
    for i in range((a - 1) // 2 + 1):
        total += (
            (-1) ** i
            * factorial(k + a)
            / factorial(k + 2 * i + 1)
            * falling(d, i)
            * falling(a - 1, 2 * i)
            / factorial(i)
        )
    return -factorial(2 * a * d + 1) / (factorial(2 * a * d - d + a) * factorial(d)) * total


def palpha2_ad(a: int, d: int) -> Fraction:
    """The second hypergeometric part of P_alpha on the same family."""
    k = (2 * a - 2) * d
    total = Fraction(0)
    for i in range(a // 2 + 1):
        total += (
            (-1) ** i
            * factorial(k + a)
            / factorial(k + 2 * i)
            * falling(d, i)
            * falling(a, 2 * i)
            / factorial(i)
        )
    return -factorial(2 * a * d) / (2 * factorial(2 * a * d - d + a) * factorial(d)) * total


def _rho_one_prefactor(a: int, d: int) -> Fraction:
    out = factorial(2 * a * d + 1)
    for k in range(1, 2 * d):
        out *= factorial(k)
    for k in range(a, a + 2 * d - 1):
        out /= factorial(k)
    return out / factorial(a + 2 * d)


def nprime_r1(p: RhoOneParams) -> Fraction:
    a, d = p.a, p.d
    return _rho_one_prefactor(a, d) * (a * pc_ad(a, d) - (4 * d + 2 * a) * palpha2_ad(a, d))


def asymptotic_prefactor(p: RhoOneParams) -> Fraction:
    a, d = p.a, p.d
    k = (2 * a - 2) * d
    return (
        _rho_one_prefactor(a, d)
        * factorial(2 * a * d)
        / (factorial(2 * a * d - d + a) * factorial(d))
        * factorial(k + a)
        / factorial(k + 1)
    )


def nprime_asymptotic_defect(p: RhoOneParams) -> Fraction:
    """``N'/F - (4a-4) d^2 - (-4a^2+2a+2) d`` for the displayed prefactor F.

    Numerically the remainder is not O(1): it grows like ``(4a^2-5a) d``,
    i.e. the linear coefficient of the expansion is ``-(3a-2)``.
    """
    a, d = p.a, p.d
    return nprime_r1(p) / asymptotic_prefactor(p) - (4 * a - 4) * d * d - (-4 * a * a + 2 * a + 2) * d


# --- r = s -------------------------------------------------------------------

# Overall sign of the r = s bracket.  The printed (-1)^C(s,2) is wrong at
# s = 1 and s = 4, 5; -1 reproduces plane-curve node counts (s = 1), Cayley's
# 4-secant line count (s = 2) and stays positive for s = 3.
RS_SIGN = -1


def _rs_factors(s: int, g: int, exponent: int, line: bool) -> list:
    factors = [
        ({(0, 0): 1, (1, 0): 1}, exponent),
        ({(0, 0): 1, (0, 1): 1}, exponent),
        ({(0, 0): 1, (1, 0): 1, (0, 1): 1}, g),
        ({(2, 0): 1, (1, 1): -2, (0, 2): 1}, 1),
    ]
    if line:
        factors.append(({(1, 1): 2, (1, 0): 1, (0, 1): 1}, 1))
    return factors


def macdonald_rs_aprime(s: int, g: int, m: int) -> Fraction:
    """2s-secant (s-1)-planes to a degree-(m+1), genus-g curve in P^{s+1}."""
    if s < 1:
        raise ValueError("s must be at least 1")
    raw = s2_build_and_extract(_rs_factors(s, g, m - g - s, line=False), s)
    return RS_SIGN * raw / 2


def macdonald_rs_a(s: int, g: int, m: int) -> Fraction:
    """(2s-1)-secant (s-1)-planes to a degree-m, genus-g curve in P^{s+1} meeting a line.

    Uses the exponent ``m-1-g-s``: with the printed ``m-g-s`` the bracket
    counts the degree-(m+1) curve instead (m+1 points on a line at s = 1).
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    raw = s2_build_and_extract(_rs_factors(s, g, m - 1 - g - s, line=True), s)
    return RS_SIGN * raw / 2
