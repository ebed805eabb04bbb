"""Truncated formal power series in one and two variables.

A :class:`Series1` of order ``n`` carries the coefficients of
``z^0 .. z^n`` and nothing beyond; every operation returns a series whose
order is the smallest order among its operands, so precision is never
silently extended.  Coefficients are normally :class:`~fractions.Fraction`,
but the univariate routines only use ring operations plus division by
integers, so any coefficient type supporting those (for instance
:class:`secantplanes.oracle.GmPolynomial`) works as well.

The second half of the module holds :class:`Series2`, a bivariate grid
used for coefficient extraction in ``t1, t2``.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .exact import as_rational, binomial

__all__ = [
    "Series1",
    "Series2",
    "s1_mul",
    "s1_pow_int",
    "s1_inverse",
    "s1_exp",
    "s1_log",
    "s1_pow_rational",
    "s1_integrate",
    "s1_derivative",
    "catalan_series",
    "one_plus_4z",
    "secant_gf",
    "secant_gf_exponential",
    "s2_build",
    "s2_build_and_extract",
    "catalan_integral_closed_form",
]


def _coerce(c):
    if isinstance(c, (int, _RationalABC)):
        return as_rational(c)
    return c


def _is_scalar(x) -> bool:
    return isinstance(x, (int, _RationalABC))


class Series1:
    """Power series in ``z`` known up to and including ``z**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs = cs + [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def constant(cls, c, order: int) -> "Series1":
        return cls([c], order)

    @classmethod
    def monomial(cls, k: int, order: int, c=1) -> "Series1":
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, order)

    def __getitem__(self, k: int):
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} outside truncation order {self.order}")
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __repr__(self) -> str:
        return f"Series1({[str(c) for c in self.coeffs]}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return Series1(self.coeffs[: order + 1], order)

    def _lift(self, other) -> "Series1":
        if isinstance(other, Series1):
            return other
        return Series1.constant(other, self.order)

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return Series1([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series1([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Series1):
            return s1_mul(self, other)
        return Series1([c * other for c in self.coeffs], self.order)

    def __rmul__(self, other):
        return Series1([other * c for c in self.coeffs], self.order)

    def __truediv__(self, other):
        if isinstance(other, Series1):
            return s1_mul(self, s1_inverse(other))
        return Series1([c / other for c in self.coeffs], self.order)

    def __pow__(self, e):
        if isinstance(e, int):
            return s1_pow_int(self, e)
        return s1_pow_rational(self, as_rational(e))

    def scale_argument(self, c) -> "Series1":
        """Substitute ``z -> c z``."""
        c = as_rational(c)
        return Series1([self.coeffs[k] * c**k for k in range(self.order + 1)], self.order)

    def shift(self, k: int) -> "Series1":
        """Multiply by ``z**k`` keeping the order."""
        return Series1([0] * k + list(self.coeffs), self.order)

    def derivative(self) -> "Series1":
        return s1_derivative(self)

    def integrate(self) -> "Series1":
        return s1_integrate(self)


def s1_mul(a: Series1, b: Series1) -> Series1:
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return Series1(out, n)


def s1_inverse(a: Series1) -> Series1:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = 1 / a0 if _is_scalar(a0) else None
    if inv0 is None:
        raise TypeError("inversion needs a scalar constant term")
    out = [inv0]
    for k in range(1, a.order + 1):
        acc = 0
        for i in range(1, k + 1):
            acc = acc + a.coeffs[i] * out[k - i]
        out.append(-acc * inv0)
    return Series1(out, a.order)


def s1_pow_int(a: Series1, e: int) -> Series1:
    if e < 0:
        return s1_pow_int(s1_inverse(a), -e)
    result = Series1.constant(1, a.order)
    base = a
    while e:
        if e & 1:
            result = s1_mul(result, base)
        e >>= 1
        if e:
            base = s1_mul(base, base)
    return result


def s1_derivative(a: Series1) -> Series1:
    """Formal derivative; the result is known one order lower."""
    if a.order == 0:
        return Series1([0], 0)
    return Series1([k * a.coeffs[k] for k in range(1, a.order + 1)], a.order - 1)


def s1_integrate(a: Series1) -> Series1:
    """Antiderivative with zero constant term, ``z^n -> z^(n+1)/(n+1)``."""
    return Series1([0] + [a.coeffs[k] / (k + 1) for k in range(a.order + 1)], a.order + 1)


def s1_exp(a: Series1) -> Series1:
    if a.coeffs[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    n = a.order
    out = [Fraction(1) if _is_scalar(a.coeffs[0]) else a.coeffs[0] + 1]
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            acc = acc + i * a.coeffs[i] * out[k - i]
        out.append(acc * Fraction(1, k))
    return Series1(out, n)


def s1_log(a: Series1) -> Series1:
    if a.coeffs[0] != 1:
        raise ValueError("log needs a series with constant term 1")
    n = a.order
    out = [a.coeffs[0] - 1]
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k):
            acc = acc + i * out[i] * a.coeffs[k - i]
        out.append(a.coeffs[k] - acc * Fraction(1, k))
    return Series1(out, n)


def s1_pow_rational(a: Series1, e) -> Series1:
    """``a**e = exp(e log a)`` for a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("rational powers need constant term 1")
    e = as_rational(e)
    return s1_exp(e * s1_log(a))


@functools.lru_cache(maxsize=None)
def catalan_series(order: int) -> Series1:
    """C(z) = sum of Catalan numbers C_n z^n, from C = 1 + z C^2."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [Fraction(1)]
    for n in range(1, order + 1):
        c.append(sum((c[i] * c[n - 1 - i] for i in range(n)), Fraction(0)))
    return Series1(c, order)


def one_plus_4z(order: int) -> Series1:
    return Series1([1, 4], order)


@functools.lru_cache(maxsize=None)
def secant_gf(g: int, m: int, order: int) -> Series1:
    """Generating function of N_d(g, m): ``C(-z)^(2g-2-m) (1+4z)^((g-1)/2)``.

    Coefficient ``d`` is the number of d-secant (d-2)-planes to a
    ``g^{2d-2}_m`` on a genus-g curve.  Coefficient 1 equals ``m``.
    """
    if g < 0:
        raise ValueError("genus must be nonnegative")
    c_neg = catalan_series(order).scale_argument(-1)
    return s1_mul(
        s1_pow_int(c_neg, 2 * g - 2 - m),
        s1_pow_rational(one_plus_4z(order), Fraction(g - 1, 2)),
    )


def secant_gf_exponential(g: int, m: int, order: int) -> Series1:
    """Same generating function written as the exponential of a log series.

    The exponent has coefficient
    ``(-1)^(n-1)/n * [C(2n-1,n-1) m + (4^(n-1) - C(2n-1,n-1)) (2g-2)]``
    in degree ``n``.
    """
    terms = [Fraction(0)]
    for n in range(1, order + 1):
        b = binomial(2 * n - 1, n - 1)
        terms.append(Fraction((-1) ** (n - 1), n) * (b * m + (4 ** (n - 1) - b) * (2 * g - 2)))
    return s1_exp(Series1(terms, order))


class Series2:
    """Power series in ``t1, t2`` truncated at ``t1**order1`` and ``t2**order2``."""

    __slots__ = ("grid", "order1", "order2")

    def __init__(self, grid: Sequence[Sequence], order1: int, order2: int):
        rows = []
        for i in range(order1 + 1):
            src = grid[i] if i < len(grid) else []
            row = [as_rational(src[j]) if j < len(src) else Fraction(0) for j in range(order2 + 1)]
            rows.append(tuple(row))
        self.grid = tuple(rows)
        self.order1 = order1
        self.order2 = order2

    @classmethod
    def from_terms(cls, terms: dict, order1: int, order2: int) -> "Series2":
        """Build from ``{(i, j): coefficient}``; terms beyond the orders are dropped."""
        grid = [[0] * (order2 + 1) for _ in range(order1 + 1)]
        for (i, j), c in terms.items():
            if i <= order1 and j <= order2:
                grid[i][j] += c
        return cls(grid, order1, order2)

    @classmethod
    def constant(cls, c, order1: int, order2: int) -> "Series2":
        return cls.from_terms({(0, 0): c}, order1, order2)

    def coefficient(self, i: int, j: int) -> Fraction:
        if not (0 <= i <= self.order1 and 0 <= j <= self.order2):
            raise IndexError(f"t1^{i} t2^{j} outside truncation ({self.order1}, {self.order2})")
        return self.grid[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return (self.order1, self.order2, self.grid) == (other.order1, other.order2, other.grid)

    def __hash__(self):
        return hash((self.order1, self.order2, self.grid))

    def __repr__(self) -> str:
        return f"Series2(order1={self.order1}, order2={self.order2})"

    def _orders(self, other: "Series2") -> tuple[int, int]:
        return min(self.order1, other.order1), min(self.order2, other.order2)

    def __add__(self, other: "Series2") -> "Series2":
        p, q = self._orders(other)
        return Series2(
            [[self.grid[i][j] + other.grid[i][j] for j in range(q + 1)] for i in range(p + 1)], p, q
        )

    def __neg__(self) -> "Series2":
        return Series2([[-c for c in row] for row in self.grid], self.order1, self.order2)

    def __sub__(self, other: "Series2") -> "Series2":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series2):
            c = as_rational(other)
            return Series2([[x * c for x in row] for row in self.grid], self.order1, self.order2)
        p, q = self._orders(other)
        out = [[Fraction(0)] * (q + 1) for _ in range(p + 1)]
        a, b = self.grid, other.grid
        for i1 in range(p + 1):
            for j1 in range(q + 1):
                x = a[i1][j1]
                if not x:
                    continue
                for i2 in range(p + 1 - i1):
                    row_b = b[i2]
                    row_o = out[i1 + i2]
                    for j2 in range(q + 1 - j1):
                        y = row_b[j2]
                        if y:
                            row_o[j1 + j2] += x * y
        return Series2(out, p, q)

    __rmul__ = __mul__

    def inverse(self) -> "Series2":
        """Multiplicative inverse; needs a nonzero constant term."""
        a00 = self.grid[0][0]
        if a00 == 0:
            raise ZeroDivisionError("bivariate series with zero constant term is not invertible")
        p, q = self.order1, self.order2
        inv0 = 1 / a00
        b = [[Fraction(0)] * (q + 1) for _ in range(p + 1)]
        a = self.grid
        for i in range(p + 1):
            for j in range(q + 1):
                if i == 0 and j == 0:
                    b[0][0] = inv0
                    continue
                acc = Fraction(0)
                for k in range(i + 1):
                    for l in range(j + 1):
                        if (k or l) and a[k][l]:
                            acc += a[k][l] * b[i - k][j - l]
                b[i][j] = -acc * inv0
        return Series2(b, p, q)

    def __pow__(self, e: int) -> "Series2":
        if not isinstance(e, int):
            raise TypeError("only integer powers of bivariate series are supported")
        base = self.inverse() if e < 0 else self
        e = abs(e)
        result = Series2.constant(1, self.order1, self.order2)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def transpose(self) -> "Series2":
        return Series2(
            [[self.grid[i][j] for i in range(self.order1 + 1)] for j in range(self.order2 + 1)],
            self.order2,
            self.order1,
        )

    def is_symmetric(self) -> bool:
        return self.order1 == self.order2 and self == self.transpose()


def s2_build(factors: Iterable[tuple[dict, int]], order1: int, order2: int) -> Series2:
    """Multiply out ``prod base_k ** e_k`` with each base given as ``{(i, j): c}``.

    Negative exponents invert the base, which then needs a nonzero
    constant term.
    """
    result = Series2.constant(1, order1, order2)
    for base, e in factors:
        result = result * (Series2.from_terms(base, order1, order2) ** e)
    return result


def s2_build_and_extract(factors: Iterable[tuple[dict, int]], s: int) -> Fraction:
    """Coefficient of ``t1^(s+1) t2^(s+1)`` in the product of ``factors``."""
    n = s + 1
    if n < 0:
        raise ValueError("s must be at least -1")
    return s2_build(factors, n, n).coefficient(n, n)


def catalan_integral_closed_form(order: int) -> Series1:
    """The closed form claimed for ``-int C(-z) dz``.

    ``1 - (1+4z)^(1/2) + 1/2 ln(z/((1+4z)^(1/2)-1)) + 1/2 ln((1+4z)^(1/2)+1)``.
    The two logarithms are merged: their arguments multiply to
    ``((1+4z)^(1/2)+1)^2 / 4``, a series with constant term 1, so the whole
    expression stays rational.
    """
    # one extra order so the division by z loses nothing
    sq = s1_pow_rational(one_plus_4z(order + 1), Fraction(1, 2))
    u = Series1(sq.coeffs[1:], order)  # ((1+4z)^(1/2) - 1) / z
    v = sq.truncate(order) + 1
    merged = s1_mul(s1_inverse(u), v)
    return (1 - sq.truncate(order)) + s1_log(merged) / 2
