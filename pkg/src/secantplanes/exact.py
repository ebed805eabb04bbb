"""Exact scalars and factorial-family helpers.

Every count in this package is an exact rational.  ``Rational`` is
:class:`fractions.Fraction`, which already keeps values in lowest terms
with a positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "factorial",
    "binomial",
    "pochhammer",
    "falling",
    "is_nonpositive_integer",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def factorial(n: int) -> Fraction:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return Fraction(math.factorial(n))


def falling(x, k: int) -> Fraction:
    """x (x-1) ... (x-k+1), the empty product when k == 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = as_rational(x)
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out


def pochhammer(x, k: int) -> Fraction:
    """Rising factorial x (x+1) ... (x+k-1)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = as_rational(x)
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def binomial(x, k: int) -> Fraction:
    """Generalized binomial coefficient with an arbitrary rational top.

    >>> binomial(-2, 2), binomial(Fraction(-1, 2), 2), binomial(7, 3)
    (Fraction(3, 1), Fraction(3, 8), Fraction(35, 1))
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return falling(x, k) / math.factorial(k)


def is_nonpositive_integer(x) -> bool:
    x = as_rational(x)
    return x.denominator == 1 and x <= 0
