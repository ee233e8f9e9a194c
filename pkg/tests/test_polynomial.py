from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from faulhaber.bernoulli import bernoulli_polynomial
from faulhaber.polynomial import (
    HALF,
    Basis,
    Polynomial,
    U,
    X,
    compose_linear,
    derivative,
    evaluate,
    from_centered,
    from_u_basis,
    scale,
    to_centered,
    to_power,
    to_u_basis,
)

from .conftest import polynomials, rationals

F = Fraction
B2 = Polynomial((F(1, 6), -1, 1))
ZERO_U = Polynomial((), Basis.U)


def P(*cs, basis=Basis.X):
    return Polynomial(tuple(cs), basis)


def _sym(p: Polynomial, x):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(p.coeffs))


def test_zero_is_empty_with_degree_minus_one():
    assert P(0, 0).coeffs == () and P().degree == -1
    assert P(1, 2, 0).coeffs == (1, 2)


def test_eval_examples():
    assert evaluate(B2, 0) == F(1, 6)
    # direct substitution: 1/4 - 1/2 + 1/6
    assert evaluate(B2, HALF) == F(-1, 12)
    assert evaluate(P(), 7) == 0


def test_eval_in_each_basis():
    assert evaluate(P(0, 1, basis=Basis.U), 3) == 3
    assert evaluate(P(0, 1, basis=Basis.CENTERED), 3) == F(5, 2)


def test_arithmetic_examples():
    assert X * (X - P(1)) == P(0, -1, 1)
    assert scale(P(0, -1, 1), HALF) == U
    assert B2 + P() == B2


def test_add_basis_mismatch():
    with pytest.raises(ValueError, match="basis mismatch"):
        X + P(1, basis=Basis.U)


def test_derivative_examples():
    assert derivative(P(0, 0, 0, 1)) == P(0, 0, 3)
    b4 = bernoulli_polynomial(4)
    assert derivative(b4) == P(0, 2, -6, 4)
    assert evaluate(derivative(b4), HALF) == 0
    assert derivative(b4, 5).is_zero()
    with pytest.raises(ValueError):
        derivative(P(1, 1, basis=Basis.U))


def test_to_centered_examples():
    c = to_centered(P(0, 0, 1))
    assert c == P(F(1, 4), 1, 1, basis=Basis.CENTERED)
    assert to_centered(P(F(3, 7))) == P(F(3, 7), basis=Basis.CENTERED)
    b6 = bernoulli_polynomial(6)
    assert from_centered(to_centered(b6)) == b6


def test_to_u_basis_examples():
    s4 = to_u_basis(bernoulli_polynomial(4))
    assert s4.even == P(F(-1, 30), 0, 4, basis=Basis.U) and s4.odd == ZERO_U
    assert s4.constant == F(-1, 30)
    s3 = to_u_basis(bernoulli_polynomial(3))
    assert s3.even == ZERO_U and s3.odd == P(0, 2, basis=Basis.U)
    sc = to_u_basis(P(F(5, 3)))
    assert sc.even == P(F(5, 3), basis=Basis.U) and sc.odd == ZERO_U


def test_from_u_basis_examples():
    assert from_u_basis(P(0, 1, basis=Basis.U), ZERO_U) == P(0, F(-1, 2), F(1, 2))
    assert from_u_basis(ZERO_U, P(1, basis=Basis.U)) == P(-HALF, 1)
    b7 = bernoulli_polynomial(7)
    s = to_u_basis(b7)
    assert from_u_basis(s.even, s.odd) == b7


def test_compose_linear_examples():
    assert compose_linear(P(0, 0, 1), 1, HALF) == P(F(1, 4), 1, 1)
    assert (compose_linear(U, 1, HALF) - compose_linear(U, -1, HALF)).is_zero()
    assert compose_linear(B2, 1, 0) == B2


def _u_adic_oracle(p: Polynomial):
    """Expand p in powers of U by repeated division by U(x) (sympy).

    Returns (even, odd) coefficient lists with p = even(U) + (x - 1/2) odd(U).
    Independent of the centered-shift path used by to_u_basis.
    """
    x = sympy.symbols("x")
    u = sympy.Poly(x * (x - 1) / 2, x)
    q = sympy.Poly(_sym(p, x), x, domain="QQ")
    digits = []
    while not q.is_zero:
        q, r = sympy.div(q, u)
        digits.append(r)
    even, odd = [], []
    for r in digits:
        # remainder r = a + b x = (a + b/2) + b (x - 1/2)
        b = r.coeff_monomial(x)
        a = r.coeff_monomial(1)
        even.append(F(str(a + b / 2)))
        odd.append(F(str(b)))
    return even, odd


@pytest.mark.parametrize("m", range(0, 16))
def test_u_basis_matches_division_oracle(m):
    p = bernoulli_polynomial(m)
    even, odd = _u_adic_oracle(p)
    s = to_u_basis(p)
    assert s.even == Polynomial(tuple(even), Basis.U)
    assert s.odd == Polynomial(tuple(odd), Basis.U)


def test_centered_matches_sympy_taylor():
    x, y = sympy.symbols("x y")
    p = bernoulli_polynomial(9)
    expected = sympy.Poly(sympy.expand(_sym(p, x).subs(x, y + sympy.Rational(1, 2))), y)
    got = to_centered(p)
    for k in range(10):
        assert got.coeff(k) == F(str(expected.coeff_monomial(y**k)))


@given(polynomials(60))
def test_centered_round_trip(p):
    assert from_centered(to_centered(p)) == p


@given(polynomials(60))
def test_u_round_trip(p):
    s = to_u_basis(p)
    assert from_u_basis(s.even, s.odd) == p


@given(polynomials(20), rationals)
def test_basis_change_preserves_values(p, x0):
    assert evaluate(to_centered(p), x0) == evaluate(p, x0)
    s = to_u_basis(p)
    assert evaluate(s.even, x0) + (x0 - HALF) * evaluate(s.odd, x0) == evaluate(p, x0)


@given(polynomials(15), rationals, rationals, rationals)
def test_compose_linear_matches_evaluation(p, a, b, x0):
    assert evaluate(compose_linear(p, a, b), x0) == evaluate(p, a * x0 + b)


@given(polynomials(10), polynomials(10), rationals)
def test_mul_is_pointwise(p, q, x0):
    assert evaluate(p * q, x0) == evaluate(p, x0) * evaluate(q, x0)


@given(polynomials(10, Basis.U), polynomials(10, Basis.U))
def test_mul_in_u_basis_matches_power_basis(p, q):
    assert to_power(p * q) == to_power(p) * to_power(q)


@given(polynomials(12), st.integers(0, 14))
def test_derivative_commutes_with_centering(p, k):
    assert to_power(derivative(to_centered(p), k)) == derivative(p, k)


@pytest.mark.parametrize("m", range(0, 31))
def test_bernoulli_reflection_symmetry(m):
    even = bernoulli_polynomial(2 * m)
    assert compose_linear(even, 1, HALF) == compose_linear(even, -1, HALF)
    odd = bernoulli_polynomial(2 * m + 1)
    assert compose_linear(odd, 1, HALF) == -compose_linear(odd, -1, HALF)
