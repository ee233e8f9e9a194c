"""Dense univariate polynomials over the rationals in three bases.

A :class:`Polynomial` stores coefficients in ascending order together with
the basis they refer to:

* ``Basis.X``         -- powers of ``x``
* ``Basis.CENTERED``  -- powers of ``(x - 1/2)``
* ``Basis.U``         -- powers of ``U(x) = x(x - 1)/2``

The zero polynomial is the empty coefficient tuple and has degree -1.
Basis changes are exact binomial shifts; nothing is evaluated or
interpolated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from .numerics import as_rational

__all__ = [
    "Basis",
    "Polynomial",
    "USplit",
    "HALF",
    "X",
    "U",
    "evaluate",
    "add",
    "sub",
    "mul",
    "scale",
    "derivative",
    "compose_linear",
    "to_centered",
    "from_centered",
    "to_power",
    "to_u_basis",
    "from_u_basis",
]

HALF = Fraction(1, 2)


class Basis(Enum):
    X = "x"
    CENTERED = "centered"
    U = "u"


def _strip(cs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(cs)
    while end and cs[end - 1] == 0:
        end -= 1
    return tuple(cs[:end])


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[Fraction, ...] = ()
    basis: Basis = Basis.X

    def __post_init__(self):
        cs = _strip([as_rational(c) for c in self.coeffs])
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, c, basis: Basis = Basis.X) -> "Polynomial":
        return cls((c,), basis)

    @property
    def degree(self) -> int:
        """Degree in the polynomial's own variable; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def x_degree(self) -> int:
        """Degree as a polynomial in x."""
        if self.basis is Basis.U and self.coeffs:
            return 2 * self.degree
        return self.degree

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x0) -> Fraction:
        return evaluate(self, x0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return sub(self, other)

    def __neg__(self) -> "Polynomial":
        return scale(self, -1)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__


X = Polynomial((0, 1))
# U(x) = x(x - 1)/2 written in powers of x
U = Polynomial((0, Fraction(-1, 2), Fraction(1, 2)))


def evaluate(p: Polynomial, x0) -> Fraction:
    """Horner evaluation in the polynomial's native variable."""
    x0 = as_rational(x0)
    if p.basis is Basis.CENTERED:
        t = x0 - HALF
    elif p.basis is Basis.U:
        t = x0 * (x0 - 1) / 2
    else:
        t = x0
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def _same_basis(p: Polynomial, q: Polynomial) -> Basis:
    if p.basis is not q.basis:
        raise ValueError(f"basis mismatch: {p.basis.value} vs {q.basis.value}; convert first")
    return p.basis


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    basis = _same_basis(p, q)
    n = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(tuple(p.coeff(k) + q.coeff(k) for k in range(n)), basis)


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    basis = _same_basis(p, q)
    n = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(tuple(p.coeff(k) - q.coeff(k) for k in range(n)), basis)


def _mul_lists(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    # products stay in the same basis because each basis is a power basis
    # in a single variable (x, x - 1/2, or U(x))
    basis = _same_basis(p, q)
    return Polynomial(tuple(_mul_lists(p.coeffs, q.coeffs)), basis)


def scale(p: Polynomial, c) -> Polynomial:
    c = as_rational(c)
    return Polynomial(tuple(c * a for a in p.coeffs), p.basis)


def derivative(p: Polynomial, k: int = 1) -> Polynomial:
    """k-th derivative with respect to x, kept in the same basis.

    Only valid for the x and centered bases (d/dx of (x - 1/2)^i behaves
    like d/dx of x^i). Convert U-basis polynomials first.
    """
    if p.basis is Basis.U:
        raise ValueError("derivative is not defined on the U basis; convert with to_power first")
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    if k == 0:
        return p
    cs = p.coeffs
    return Polynomial(tuple(math.perm(i, k) * cs[i] for i in range(k, len(cs))), p.basis)


def _compose_linear_list(cs: Sequence[Fraction], a: Fraction, b: Fraction) -> list[Fraction]:
    acc: list[Fraction] = []
    for c in reversed(cs):
        # acc <- acc * (a x + b) + c
        nxt = [Fraction(0)] * (len(acc) + 1)
        for i, v in enumerate(acc):
            nxt[i] += v * b
            nxt[i + 1] += v * a
        nxt[0] += c
        acc = nxt
    return acc


def _horner_compose(cs: Sequence[Fraction], inner: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients of sum_k cs[k] * inner^k."""
    acc: list[Fraction] = []
    for c in reversed(cs):
        acc = _mul_lists(acc, inner) or [Fraction(0)]
        acc[0] += c
    return acc


def compose_linear(p: Polynomial, a, b) -> Polynomial:
    """Return p(a*x + b) for p in the x basis."""
    if p.basis is not Basis.X:
        raise ValueError("compose_linear expects a polynomial in the x basis")
    return Polynomial(tuple(_compose_linear_list(p.coeffs, as_rational(a), as_rational(b))), Basis.X)


def to_centered(p: Polynomial) -> Polynomial:
    """Re-express p in powers of (x - 1/2): substitute x = y + 1/2."""
    if p.basis is Basis.CENTERED:
        return p
    q = to_power(p)
    return Polynomial(tuple(_compose_linear_list(q.coeffs, Fraction(1), HALF)), Basis.CENTERED)


def from_centered(p: Polynomial) -> Polynomial:
    if p.basis is not Basis.CENTERED:
        raise ValueError("from_centered expects a centered-basis polynomial")
    return Polynomial(tuple(_compose_linear_list(p.coeffs, Fraction(1), -HALF)), Basis.X)


def to_power(p: Polynomial) -> Polynomial:
    """Convert from any basis to powers of x."""
    if p.basis is Basis.X:
        return p
    if p.basis is Basis.CENTERED:
        return from_centered(p)
    return from_u_basis(p, Polynomial((), Basis.U))


class USplit(NamedTuple):
    """p(x) = even(U(x)) + (x - 1/2) * odd(U(x)).

    ``constant`` is the U^0 coefficient of ``even``, i.e. p(0) when
    ``odd`` is zero.
    """

    constant: Fraction
    even: Polynomial
    odd: Polynomial


def _in_u(cs: Sequence[Fraction]) -> Polynomial:
    # sum_j cs[j] * (x - 1/2)^(2j) with (x - 1/2)^2 = 1/4 + 2U
    shift = [Fraction(1, 4), Fraction(2)]
    return Polynomial(tuple(_horner_compose(cs, shift)), Basis.U)


def to_u_basis(p: Polynomial) -> USplit:
    """Split p into parts even and odd about x = 1/2, each written in U."""
    if p.basis is Basis.U:
        return USplit(p.coeff(0), p, Polynomial((), Basis.U))
    v = to_centered(p).coeffs
    even = _in_u(v[0::2])
    odd = _in_u(v[1::2])
    return USplit(even.coeff(0), even, odd)


def _substitute_u(q: Polynomial) -> list[Fraction]:
    return _horner_compose(q.coeffs, U.coeffs)


def from_u_basis(even: Polynomial, odd: Polynomial) -> Polynomial:
    """Rebuild even(U(x)) + (x - 1/2) * odd(U(x)) in powers of x."""
    for part in (even, odd):
        if part.basis is not Basis.U:
            raise ValueError("from_u_basis expects U-basis parts")
    e = Polynomial(tuple(_substitute_u(even)))
    o = Polynomial(tuple(_mul_lists(_substitute_u(odd), [-HALF, Fraction(1)])))
    return e + o
