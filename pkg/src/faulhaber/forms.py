"""Faulhaber forms of power sums.

For n >= 1 let S_m = 1^m + ... + n^m. With S_1 = n(n+1)/2 and
S_2 = n(n+1)(2n+1)/6, every power sum of exponent >= 2 factors as

    S_{2m}   = S_2   * (b_{m,0} + b_{m,1} S_1 + ... + b_{m,m-1} S_1^{m-1})
    S_{2m+1} = S_1^2 * (c_{m,0} + c_{m,1} S_1 + ... + c_{m,m-1} S_1^{m-1})

The coefficients are computed from closed-form sums over Bernoulli numbers
at 1/2. ``hat_b_even``/``hat_b_odd`` give the U-basis coefficients of
B_{2m}(x) and B_{2m+1}(x)/(x - 1/2), from which b and c follow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .bernoulli import bernoulli_at_half, bernoulli_number, bernoulli_polynomial
from .numerics import binomial
from .polynomial import Polynomial, compose_linear, mul, scale

__all__ = [
    "Parity",
    "FaulhaberForm",
    "UDecomposition",
    "S1_POLY",
    "S2_POLY",
    "hat_b_even",
    "hat_b_odd",
    "u_decomposition",
    "coeff_b",
    "coeff_c",
    "bc_relation_check",
    "power_sum_bruteforce",
    "power_sum_bernoulli",
    "power_sum_polynomial",
    "faulhaber_form",
    "eval_faulhaber",
    "faulhaber_polynomial_identity",
]

# power sums as polynomials in n
S1_POLY = Polynomial((0, Fraction(1, 2), Fraction(1, 2)))
S2_POLY = Polynomial((0, Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)))


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


def _check_index(m: int, j: int, lo: int, hi: int) -> None:
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if not lo <= j <= hi:
        raise ValueError(f"j={j} out of range [{lo}, {hi}] for m={m}")


def _half_sum(m: int, j: int, top: int, odd_row: bool) -> Fraction:
    """sum_{k=j}^{m} 4^{-k} C(top, 2k + odd_row) C(k, j) B_{2m-2k}(1/2)."""
    total = Fraction(0)
    for k in range(j, m + 1):
        c = binomial(top, 2 * k + odd_row) * binomial(k, j)
        total += Fraction(c, 4**k) * bernoulli_at_half(2 * m - 2 * k)
    return total


def hat_b_even(m: int, j: int) -> Fraction:
    """Coefficient of U(x)^j in B_{2m}(x)."""
    _check_index(m, j, 0, m)
    return 8**j * _half_sum(m, j, 2 * m, False)


def hat_b_odd(m: int, j: int) -> Fraction:
    """Coefficient of U(x)^j in B_{2m+1}(x) / (x - 1/2)."""
    _check_index(m, j, 0, m)
    return 8**j * _half_sum(m, j, 2 * m + 1, True)


@dataclass(frozen=True)
class UDecomposition:
    source_degree: int
    hat_coeffs: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return self.source_degree // 2

    def structural_violations(self) -> list[str]:
        """Empty when the expected zero/nonzero pattern holds."""
        h, m, out = self.hat_coeffs, self.m, []
        if self.source_degree % 2 == 0:
            if h[0] != bernoulli_number(self.source_degree):
                out.append("hat_0 != B_{2m}")
            if m >= 2:
                if h[1] != 0:
                    out.append("hat_1 != 0")
                out += [f"hat_{j} == 0" for j in range(2, m + 1) if h[j] == 0]
        else:
            if m >= 1 and h[0] != 0:
                out.append("hat_0 != 0")
            out += [f"hat_{j} == 0" for j in range(1, m + 1) if h[j] == 0]
        return out


def u_decomposition(degree: int) -> UDecomposition:
    """Closed-form U-basis coefficients of B_degree(x)."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    m = degree // 2
    f = hat_b_even if degree % 2 == 0 else hat_b_odd
    return UDecomposition(degree, tuple(f(m, j) for j in range(m + 1)))


def coeff_b(m: int, j: int) -> Fraction:
    """b_{m,j}: S_{2m} = S_2 * sum_j b_{m,j} S_1^j."""
    if m < 1:
        raise ValueError("coeff_b needs m >= 1")
    _check_index(m, j, 0, m - 1)
    return Fraction(3 * 8 ** (j + 1), 4 * m + 2) * _half_sum(m, j + 1, 2 * m + 1, True)


def coeff_c(m: int, j: int) -> Fraction:
    """c_{m,j}: S_{2m+1} = S_1^2 * sum_j c_{m,j} S_1^j."""
    if m < 1:
        raise ValueError("coeff_c needs m >= 1")
    _check_index(m, j, 0, m - 1)
    return Fraction(8 ** (j + 1), j + 2) * _half_sum(m, j + 1, 2 * m + 1, True)


def bc_relation_check(m: int, j: int) -> bool:
    """c_{m,j} == (4m + 2)/(3j + 6) * b_{m,j}."""
    return coeff_c(m, j) * (3 * j + 6) == (4 * m + 2) * coeff_b(m, j)


def power_sum_bruteforce(m: int, n: int) -> int:
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    return sum(i**m for i in range(1, n + 1))


def _horner_int(cs: Sequence[Fraction], t: int) -> Fraction:
    """Evaluate sum cs[k] t^k at integer t over a common denominator."""
    den = math.lcm(*(c.denominator for c in cs)) if cs else 1
    acc = 0
    for c in reversed(cs):
        acc = acc * t + c.numerator * (den // c.denominator)
    return Fraction(acc, den)


def power_sum_bernoulli(m: int, n: int) -> Fraction:
    """S_m(n) = (B_{m+1}(n + 1) - B_{m+1}) / (m + 1).

    Not valid for m = 0: with B_1 = -1/2 the right side counts the 0^0 term
    and returns n + 1.
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    b = bernoulli_polynomial(m + 1)
    return (_horner_int(b.coeffs, n + 1) - bernoulli_number(m + 1)) / (m + 1)


def power_sum_polynomial(m: int) -> Polynomial:
    """S_m as a polynomial in n, from the Bernoulli route."""
    if m < 1:
        raise ValueError("need m >= 1")
    b = bernoulli_polynomial(m + 1)
    shifted = compose_linear(b, 1, 1) - Polynomial.constant(bernoulli_number(m + 1))
    return scale(shifted, Fraction(1, m + 1))


@dataclass(frozen=True)
class FaulhaberForm:
    exponent: int
    parity: Parity
    coeffs: tuple[Fraction, ...]

    @property
    def m(self) -> int:
        return self.exponent // 2

    @property
    def prefactor(self) -> str:
        return "S_2" if self.parity is Parity.EVEN else "S_1^2"

    def inner(self) -> Polynomial:
        """F as a polynomial in the variable S_1."""
        return Polynomial(self.coeffs)

    def as_polynomial_in_n(self) -> Polynomial:
        f_of_s1 = Polynomial()
        for c in reversed(self.coeffs):
            f_of_s1 = mul(f_of_s1, S1_POLY) + Polynomial.constant(c)
        pre = S2_POLY if self.parity is Parity.EVEN else mul(S1_POLY, S1_POLY)
        return mul(pre, f_of_s1)


def faulhaber_form(exponent: int) -> FaulhaberForm:
    if exponent < 2:
        raise ValueError("S_0 and S_1 have no Faulhaber form; use power_sum_* directly")
    m, odd = divmod(exponent, 2)
    f = coeff_c if odd else coeff_b
    coeffs = tuple(f(m, j) for j in range(m))
    zeros = [j for j, c in enumerate(coeffs) if c == 0]
    if zeros:
        raise ArithmeticError(f"S_{exponent}: zero Faulhaber coefficient(s) at j={zeros}")
    return FaulhaberForm(exponent, Parity.ODD if odd else Parity.EVEN, coeffs)


def eval_faulhaber(form: FaulhaberForm, n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    s1 = n * (n + 1) // 2
    if form.parity is Parity.EVEN:
        pre = n * (n + 1) * (2 * n + 1) // 6
    else:
        pre = s1 * s1
    return pre * _horner_int(form.coeffs, s1)


def faulhaber_polynomial_identity(exponent: int) -> bool:
    """prefactor(n) * F(S_1(n)) equals the Bernoulli power-sum polynomial."""
    form = faulhaber_form(exponent)
    return form.as_polynomial_in_n() == power_sum_polynomial(exponent)
