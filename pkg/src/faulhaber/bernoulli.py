"""Bernoulli numbers and polynomials.

Convention: B_1 = -1/2, so that B_m(0) = B_m and
S_m(n) = (B_{m+1}(n + 1) - B_{m+1}) / (m + 1).

Numbers come from the recurrence sum_{i=0}^{m} C(m+1, i) B_i = 0 (m >= 1).
Odd-index zeros are produced by the recurrence, never hard-coded.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .numerics import binomial, rpow
from .polynomial import HALF, Polynomial, derivative, evaluate, scale

__all__ = [
    "BernoulliCache",
    "DEFAULT_CACHE",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "bernoulli_at_half",
    "check_half_value",
    "check_derivative_property",
]


class BernoulliCache:
    """Grow-only memo of B_0, B_1, ...

    Growth happens under a lock; readers only ever index into the prefix
    that was fully written before the list was extended.
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def _extend_to(self, j: int) -> None:
        with self._lock:
            vals = self._values
            for m in range(len(vals), j + 1):
                # sum_{i=0}^{m} C(m+1, i) B_i = 0, solved for B_m
                acc = sum((binomial(m + 1, i) * vals[i] for i in range(m)), Fraction(0))
                vals.append(-acc / (m + 1))

    def __getitem__(self, j: int) -> Fraction:
        if j < 0:
            raise IndexError("Bernoulli index must be >= 0")
        if j >= len(self._values):
            self._extend_to(j)
        return self._values[j]

    def upto(self, j: int) -> list[Fraction]:
        self[j]
        return self._values[: j + 1]


DEFAULT_CACHE = BernoulliCache()


def bernoulli_number(j: int) -> Fraction:
    return DEFAULT_CACHE[j]


def bernoulli_numbers(j: int) -> list[Fraction]:
    """[B_0, ..., B_j]."""
    return DEFAULT_CACHE.upto(j)


@lru_cache(maxsize=None)
def bernoulli_polynomial(m: int) -> Polynomial:
    """B_m(x) = sum_j C(m, j) B_j x^(m-j), in powers of x."""
    if m < 0:
        raise ValueError("Bernoulli polynomial index must be >= 0")
    bs = bernoulli_numbers(m)
    return Polynomial(tuple(binomial(m, m - k) * bs[m - k] for k in range(m + 1)))


def bernoulli_at_half(r: int) -> Fraction:
    """B_r(1/2) from the half-argument relation (2^(1-r) - 1) B_r."""
    return (Fraction(2, 1 << r) - 1) * bernoulli_number(r)


def check_half_value(m: int) -> bool:
    """B_m(1/2) evaluated from the polynomial equals (2^(1-m) - 1) B_m."""
    lhs = evaluate(bernoulli_polynomial(m), HALF)
    rhs = (2 * rpow(HALF, m) - 1) * bernoulli_number(m)
    return lhs == rhs


def check_derivative_property(m: int, k: int) -> bool:
    """d^k/dx^k B_m(x) == k! C(m, k) B_{m-k}(x) as polynomials.

    For k > m the derivative must be the zero polynomial.
    """
    if k < 0 or m < 0:
        raise ValueError("need m >= 0 and k >= 0")
    lhs = derivative(bernoulli_polynomial(m), k)
    if k > m:
        return lhs.is_zero()
    factor = 1
    for i in range(m - k + 1, m + 1):
        factor *= i
    # factor = m!/(m-k)! = k! C(m, k)
    return lhs == scale(bernoulli_polynomial(m - k), factor)
