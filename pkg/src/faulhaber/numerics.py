"""Exact integer and rational primitives.

Python ints are unbounded and ``fractions.Fraction`` keeps a canonical
reduced form (positive denominator, gcd 1, zero as 0/1), so both are used
directly. Floats are rejected everywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = ["Fraction", "rat", "as_rational", "binomial", "rpow", "is_canonical"]


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; refuse anything inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, _RationalABC):
        raise TypeError(f"exact rational expected, got {type(value).__name__}")
    return Fraction(value)


def rat(num: int, den: int = 1) -> Fraction:
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError("rat() takes integer numerator and denominator")
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rpow(a, e: int) -> Fraction:
    if e < 0:
        raise ValueError("rpow requires a non-negative exponent")
    # Fraction(0) ** 0 == 1, which is the convention we want
    return as_rational(a) ** e


def is_canonical(q: Fraction) -> bool:
    return q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1
