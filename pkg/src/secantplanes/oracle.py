"""Brute-force intersection numbers on C^d.

The secant bundle of ``L`` (degree ``m``) over ``C^d`` has Chern roots

    x_1 = l_1,   x_j = l_j - (Delta_{1j} + ... + Delta_{j-1,j}),

and the number of d-secant (d-2)-planes is ``1/d!`` times the degree of
``det[c_{1+j-i}]``.  Degrees are computed with the rules

    l_j^2 = 0,   l_j Delta_{ij} = m pt on the identified factor,
    Delta_{ij}^2 = -omega Delta_{ij},   omega = (2g-2) pt,

which we track as follows.  A *state* is a partition of the factors
``1..d`` into blocks (factors glued by diagonals) together with the set of
blocks already carrying a point class.  Multiplying by a generator either
loads a block, merges two blocks, or kills the term; a degree-d product
survives iff every block ends up loaded exactly once.  Results are
polynomials in ``m`` and ``gamma = 2g - 2``.
"""
from __future__ import annotations

import functools
import math
import os
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .closed_forms import ConsistencyError
from .exact import binomial
from .series import Series1, s1_log

__all__ = [
    "GmPolynomial",
    "IntersectionTerm",
    "oracle_cap",
    "chern_classes",
    "porteous_degree",
    "nd_oracle",
    "lemma_coefficients",
    "lemma_expected",
    "lemma_report",
    "exponential_formula_check",
]

DEFAULT_CAP = 6


def oracle_cap() -> int:
    """Largest d the oracle accepts; raise it with SECANT_ORACLE_CAP."""
    raw = os.environ.get("SECANT_ORACLE_CAP")
    return max(DEFAULT_CAP, int(raw)) if raw else DEFAULT_CAP


def _check_cap(d: int, low: int = 1) -> None:
    if d < low:
        raise ValueError(f"d must be at least {low}")
    cap = oracle_cap()
    if d > cap:
        raise ValueError(f"d = {d} exceeds the oracle cap {cap} (set SECANT_ORACLE_CAP to raise it)")


# --- polynomials in m and gamma ----------------------------------------------


class GmPolynomial:
    """Polynomial in ``m`` and ``gamma`` with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def m(cls):
        return cls({(1, 0): 1})

    @classmethod
    def gamma(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def _wrap(self, other):
        if isinstance(other, GmPolynomial):
            return other
        if isinstance(other, (int, _RationalABC)):
            return GmPolynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GmPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return GmPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return GmPolynomial({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, GmPolynomial):
            return NotImplemented
        out = defaultdict(Fraction)
        for (a, b), u in self.terms.items():
            for (c, e), v in other.terms.items():
                out[(a + c, b + e)] += u * v
        return GmPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, _RationalABC)):
            return NotImplemented
        return GmPolynomial({k: v / other for k, v in self.terms.items()})

    def __eq__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, m_power: int, gamma_power: int) -> Fraction:
        return self.terms.get((m_power, gamma_power), Fraction(0))

    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def evaluate(self, m, g) -> Fraction:
        gamma = 2 * g - 2
        return sum((c * Fraction(m) ** a * Fraction(gamma) ** b for (a, b), c in self.terms.items()), Fraction(0))

    def __repr__(self):
        return f"GmPolynomial({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (a, b) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.terms[(a, b)]
            mono = "".join(
                part
                for part in (
                    "m" if a == 1 else f"m^{a}" if a else "",
                    "γ" if b == 1 else f"γ^{b}" if b else "",
                )
            )
            mag = abs(c)
            if mono:
                text = mono if mag == 1 else f"{mag}{mono}" if mag.denominator == 1 else f"({mag}){mono}"
            else:
                text = str(mag)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out


# --- reduced states -----------------------------------------------------------

# A state is (labels, loaded): labels[i] is the smallest factor in the block
# of factor i, loaded the frozenset of block labels carrying a point class.


def _initial_state(d: int):
    return (tuple(range(d)), frozenset())


# factor markers returned by the reduction steps
_TIMES_M = 1
_TIMES_NEG_GAMMA = 2


def _apply_line(state, k):
    labels, loaded = state
    b = labels[k]
    if b in loaded:
        return None
    return (labels, loaded | {b}), _TIMES_M


def _apply_diagonal(state, i, j):
    labels, loaded = state
    bi, bj = labels[i], labels[j]
    if bi == bj:
        if bi in loaded:
            return None
        return (labels, loaded | {bi}), _TIMES_NEG_GAMMA
    if bi in loaded and bj in loaded:
        return None
    lo, hi = min(bi, bj), max(bi, bj)
    new_labels = tuple(lo if x == hi else x for x in labels)
    new_loaded = (loaded - {hi}) | ({lo} if (bi in loaded or bj in loaded) else set())
    return (new_labels, frozenset(new_loaded)), None


def _apply_generator(state, gen):
    """gen is ("l", k) or ("D", i, j), 0-based."""
    if gen[0] == "l":
        return _apply_line(state, gen[1])
    return _apply_diagonal(state, gen[1], gen[2])


def _fully_loaded(state) -> bool:
    labels, loaded = state
    return set(labels) == set(loaded)


def _scalar(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class _StateSum:
    """Formal sum of states times monomials in m and gamma.

    Keys are ``(state, m_power, gamma_power)``, values exact scalars.
    """

    def __init__(self, items=None):
        self.items = dict(items or {})

    @classmethod
    def unit(cls, d: int) -> "_StateSum":
        return cls({(_initial_state(d), 0, 0): 1})

    def add(self, key, coeff):
        new = self.items.get(key, 0) + coeff
        if new:
            self.items[key] = new
        else:
            self.items.pop(key, None)

    def times_generators(self, gens, coeff=1) -> "_StateSum":
        coeff = _scalar(coeff)
        out = _StateSum()
        for (state, pm, pg), c in self.items.items():
            c = c * coeff
            cur = state
            for gen in gens:
                step = _apply_generator(cur, gen)
                if step is None:
                    break
                cur, factor = step
                if factor == _TIMES_M:
                    pm += 1
                elif factor == _TIMES_NEG_GAMMA:
                    pg += 1
                    c = -c
            else:
                out.add((cur, pm, pg), c)
        return out

    def __iadd__(self, other):
        for key, c in other.items.items():
            self.add(key, c)
        return self

    def __add__(self, other):
        out = _StateSum(self.items)
        out += other
        return out

    def scaled(self, c) -> "_StateSum":
        c = _scalar(c)
        return _StateSum({k: v * c for k, v in self.items.items()})

    def degree_value(self) -> GmPolynomial:
        acc = defaultdict(int)
        for (state, pm, pg), c in self.items.items():
            if _fully_loaded(state):
                acc[(pm, pg)] += c
        return GmPolynomial(acc)


# --- intersection terms -------------------------------------------------------


@dataclass(frozen=True)
class IntersectionTerm:
    """``coefficient * prod Delta_{ij}^{mult} * prod l_j`` on C^d (1-based indices)."""

    coefficient: Fraction
    diagonals: tuple = ()
    lines: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        object.__setattr__(self, "diagonals", tuple(sorted(self.diagonals)))
        object.__setattr__(self, "lines", tuple(sorted(self.lines)))

    @property
    def degree(self) -> int:
        return sum(mult for _, mult in self.diagonals) + len(self.lines)

    def times(self, other: "IntersectionTerm") -> "IntersectionTerm":
        diag = dict(self.diagonals)
        for pair, mult in other.diagonals:
            diag[pair] = diag.get(pair, 0) + mult
        return IntersectionTerm(
            self.coefficient * other.coefficient,
            tuple(diag.items()),
            self.lines + other.lines,
        )

    def generators(self) -> list:
        gens = []
        for (i, j), mult in self.diagonals:
            gens.extend([("D", i - 1, j - 1)] * mult)
        gens.extend(("l", k - 1) for k in self.lines)
        return gens

    def evaluate(self, d: int) -> GmPolynomial:
        """Degree on C^d; zero unless the term has degree d."""
        if self.degree != d:
            return GmPolynomial()
        if any(mult > 2 for _, mult in self.diagonals):
            return GmPolynomial()
        return _StateSum.unit(d).times_generators(self.generators(), self.coefficient).degree_value()

    def __str__(self):
        parts = [f"D{i}{j}" + (f"^{k}" if k > 1 else "") for (i, j), k in self.diagonals]
        parts += [f"l{k}" for k in self.lines]
        return f"{self.coefficient}*" + "*".join(parts) if parts else str(self.coefficient)


def _chern_root(j: int) -> list:
    """x_j as a list of IntersectionTerm (1-based)."""
    root = [IntersectionTerm(1, (), (j,))]
    root += [IntersectionTerm(-1, (((i, j), 1),), ()) for i in range(1, j)]
    return root


def _collect(terms) -> list:
    acc = {}
    for t in terms:
        key = (t.diagonals, t.lines)
        acc[key] = acc.get(key, Fraction(0)) + t.coefficient
    return [IntersectionTerm(c, k[0], k[1]) for k, c in sorted(acc.items()) if c]


@functools.lru_cache(maxsize=None)
def _chern_classes(d: int) -> tuple:
    elem = [[IntersectionTerm(1)]] + [[] for _ in range(d)]
    for j in range(1, d + 1):
        x = _chern_root(j)
        for k in range(j, 0, -1):
            elem[k] = _collect(elem[k] + [a.times(b) for a in elem[k - 1] for b in x])
    return tuple(tuple(c) for c in elem[1:])


def chern_classes(d: int) -> list:
    """``[c_1, ..., c_d]`` of the secant bundle, each a list of IntersectionTerm."""
    _check_cap(d)
    return [list(c) for c in _chern_classes(d)]


# --- Porteous degree -----------------------------------------------------------


def _times_linear(ss: _StateSum, form: list) -> _StateSum:
    out = _StateSum()
    for t in form:
        out += ss.times_generators(t.generators(), t.coefficient)
    return out


def _times_elementary(ss: _StateSum, top: int, d: int) -> list:
    """``[e_0 ss, e_1 ss, ..., e_top ss]`` through prod (1 + x_i t)."""
    graded = [ss] + [_StateSum() for _ in range(top)]
    for i in range(1, d + 1):
        root = _chern_root(i)
        for k in range(top, 0, -1):
            graded[k] += _times_linear(graded[k - 1], root)
    return graded


def _route_determinant(d: int) -> GmPolynomial:
    # D_n = sum_j (-1)^(j+1) c_j D_{n-j}, first-row Laplace expansion of det[c_{1+j-i}]
    dets = [_StateSum.unit(d)]
    products = []  # products[k][j] = c_j D_k
    for n in range(1, d + 1):
        products.append(_times_elementary(dets[n - 1], d - n + 1, d))
        acc = _StateSum()
        for j in range(1, n + 1):
            acc += products[n - j][j].scaled(1 if j % 2 else -1)
        dets.append(acc)
    return dets[d].degree_value()


def _route_complete_homogeneous(d: int) -> GmPolynomial:
    # h_d(x_1..x_d) via prod 1/(1 - x_i t): H_i[k] = H_{i-1}[k] + x_i H_i[k-1]
    graded = [_StateSum.unit(d)] + [_StateSum() for _ in range(d)]
    for i in range(1, d + 1):
        root = _chern_root(i)
        for k in range(1, d + 1):
            graded[k] += _times_linear(graded[k - 1], root)
    return graded[d].degree_value()


def _route_literal(d: int) -> GmPolynomial:
    """Expand the determinant into explicit monomials, then evaluate each."""
    chern = _chern_classes(d)
    dets = [[IntersectionTerm(1)]]
    for n in range(1, d + 1):
        acc = []
        for j in range(1, n + 1):
            sign = 1 if j % 2 else -1
            for a in chern[j - 1]:
                for b in dets[n - j]:
                    t = a.times(b)
                    acc.append(IntersectionTerm(sign * t.coefficient, t.diagonals, t.lines))
        dets.append(_collect(acc))
    total = GmPolynomial()
    for t in dets[d]:
        total = total + t.evaluate(d)
    return total


_PORTEOUS_ROUTES = {
    "determinant": _route_determinant,
    "complete_homogeneous": _route_complete_homogeneous,
    "literal": _route_literal,
}


@functools.lru_cache(maxsize=None)
def _porteous(d: int, route: str) -> GmPolynomial:
    return _PORTEOUS_ROUTES[route](d)


def porteous_degree(d: int, route: str = "determinant") -> GmPolynomial:
    """Degree of ``det[c_{1+j-i}]`` on C^d as a polynomial in m and gamma.

    For d <= 4 every route is computed and compared.
    """
    _check_cap(d)
    if route not in _PORTEOUS_ROUTES:
        raise ValueError(f"unknown route {route!r}; choose from {sorted(_PORTEOUS_ROUTES)}")
    value = _porteous(d, route)
    if d <= 4:
        for other in _PORTEOUS_ROUTES:
            if _porteous(d, other) != value:
                raise ConsistencyError(f"porteous_degree({d}): {other} disagrees with {route}")
    return value


def nd_oracle(d: int, g: int, m: int) -> Fraction:
    return porteous_degree(d).evaluate(m, g) / math.factorial(d)


# --- linear coefficients -------------------------------------------------------


def lemma_expected(d: int) -> tuple[Fraction, Fraction]:
    """Absolute values of the m and gamma coefficients of porteous_degree(d)."""
    b = binomial(2 * d - 1, d - 1)
    f = math.factorial(d - 1)
    return b * f, (4 ** (d - 1) - b) * f


def lemma_coefficients(d: int) -> tuple[Fraction, Fraction]:
    """|coefficient of m| and |coefficient of gamma| in porteous_degree(d)."""
    _check_cap(d, low=2)
    p = porteous_degree(d)
    return abs(p.coefficient(1, 0)), abs(p.coefficient(0, 1))


def lemma_report(d: int) -> dict:
    """Signed coefficients against the closed forms; both carry sign (-1)^(d-1)."""
    _check_cap(d, low=2)
    p = porteous_degree(d)
    sign = (-1) ** (d - 1)
    em, eg = lemma_expected(d)
    actual = (p.coefficient(1, 0), p.coefficient(0, 1))
    expected = (sign * em, sign * eg)
    return {"d": d, "actual": actual, "expected": expected, "ok": actual == expected}


def exponential_formula_check(order: int) -> list:
    """Mismatches between log(sum N_d z^d) and the linear forms in m and gamma.

    The oracle polynomials N_d = porteous_degree(d)/d! are assembled into a
    series with GmPolynomial coefficients; coefficient n of its logarithm
    must be ``(-1)^(n-1)/n * [C(2n-1,n-1) m + (4^(n-1) - C(2n-1,n-1)) gamma]``.
    Returns a list of ``(n, expected, actual)`` for every mismatch.
    """
    _check_cap(order)
    coeffs = [GmPolynomial.const(1)] + [porteous_degree(n) / math.factorial(n) for n in range(1, order + 1)]
    log = s1_log(Series1(coeffs, order))
    bad = []
    for n in range(1, order + 1):
        b = binomial(2 * n - 1, n - 1)
        expected = (GmPolynomial.m() * b + GmPolynomial.gamma() * (4 ** (n - 1) - b)) * Fraction((-1) ** (n - 1), n)
        if log[n] != expected:
            bad.append((n, expected, log[n]))
    return bad
