from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from faulhaber.bernoulli import bernoulli_number, bernoulli_polynomial
from faulhaber.forms import (
    S1_POLY,
    S2_POLY,
    FaulhaberForm,
    Parity,
    bc_relation_check,
    coeff_b,
    coeff_c,
    eval_faulhaber,
    faulhaber_form,
    faulhaber_polynomial_identity,
    hat_b_even,
    hat_b_odd,
    power_sum_bernoulli,
    power_sum_bruteforce,
    u_decomposition,
)
from faulhaber.polynomial import Polynomial, U, compose_linear, to_u_basis

F = Fraction


def fit_form(exponent):
    """Solve S_e(n) = prefactor(n) * sum_j a_j S_1(n)^j from n = 1..m by brute force sums."""
    m = exponent // 2
    rows, rhs = [], []
    for n in range(1, m + 1):
        s1 = sympy.Integer(n * (n + 1) // 2)
        pre = sympy.Integer(n * (n + 1) * (2 * n + 1) // 6) if exponent % 2 == 0 else s1**2
        rows.append([pre * s1**j for j in range(m)])
        rhs.append(sum(sympy.Integer(i) ** exponent for i in range(1, n + 1)))
    sol = sympy.Matrix(rows).LUsolve(sympy.Matrix(rhs))
    return [F(str(v)) for v in sol]


def test_hat_b_examples():
    assert hat_b_even(2, 2) == 4
    assert hat_b_even(2, 1) == 0
    assert hat_b_even(2, 0) == F(-1, 30)
    assert hat_b_odd(1, 1) == 2
    assert hat_b_odd(1, 0) == 0
    assert hat_b_odd(2, 2) == to_u_basis(bernoulli_polynomial(5)).odd.coeff(2)


def test_hat_b_range_errors():
    for f in (hat_b_even, hat_b_odd):
        with pytest.raises(ValueError):
            f(2, 3)
        with pytest.raises(ValueError):
            f(2, -1)
    with pytest.raises(ValueError):
        coeff_b(2, 2)
    with pytest.raises(ValueError):
        coeff_c(0, 0)


@pytest.mark.parametrize("m", range(0, 41))
def test_closed_forms_match_expansion(m):
    even = to_u_basis(bernoulli_polynomial(2 * m)).even
    odd = to_u_basis(bernoulli_polynomial(2 * m + 1)).odd
    assert [hat_b_even(m, j) for j in range(m + 1)] == [even.coeff(j) for j in range(m + 1)]
    assert [hat_b_odd(m, j) for j in range(m + 1)] == [odd.coeff(j) for j in range(m + 1)]
    assert even.degree <= m and odd.degree <= m


def test_structural_zeros_and_nonzeros():
    for m in range(0, 41):
        assert hat_b_even(m, 0) == bernoulli_number(2 * m)
        if m >= 2:
            assert hat_b_even(m, 1) == 0
        assert all(hat_b_even(m, j) != 0 for j in range(2, m + 1))
        if m >= 1:
            assert hat_b_odd(m, 0) == 0
        assert all(hat_b_odd(m, j) != 0 for j in range(1, m + 1))
        assert u_decomposition(2 * m).structural_violations() == []
        assert u_decomposition(2 * m + 1).structural_violations() == []


def test_coefficient_examples():
    assert coeff_b(1, 0) == 1 == 6 * bernoulli_number(2)
    assert coeff_b(2, 0) == F(-1, 5) == 6 * bernoulli_number(4)
    assert coeff_b(2, 1) == F(6, 5)
    assert coeff_c(1, 0) == 1
    assert coeff_c(2, 0) == F(-1, 3) == 10 * bernoulli_number(4)
    assert coeff_c(2, 1) == F(4, 3)


@pytest.mark.parametrize("exponent", range(2, 17))
def test_coefficients_match_brute_force_fit(exponent):
    assert list(faulhaber_form(exponent).coeffs) == fit_form(exponent)


def test_coefficients_through_hat_relations():
    # b from the odd U-expansion, c from the even one: two different sums
    for m in range(1, 41):
        for j in range(m):
            assert coeff_b(m, j) == F(3, 4 * m + 2) * hat_b_odd(m, j + 1)
            assert coeff_c(m, j) == F(1, 2 * m + 2) * hat_b_even(m + 1, j + 2)


def test_leading_anchors():
    for m in range(1, 41):
        assert coeff_b(m, 0) == 6 * bernoulli_number(2 * m)
        assert coeff_c(m, 0) == (4 * m + 2) * bernoulli_number(2 * m)


def test_bc_relation():
    assert bc_relation_check(2, 0) and F(10, 6) * F(-1, 5) == F(-1, 3)
    assert bc_relation_check(2, 1) and F(10, 9) * F(6, 5) == F(4, 3)
    assert bc_relation_check(1, 0)
    assert all(bc_relation_check(m, j) for m in range(1, 41) for j in range(m))


def test_power_sum_examples():
    assert power_sum_bruteforce(1, 3) == 6
    assert power_sum_bruteforce(2, 2) == 5
    assert power_sum_bruteforce(0, 7) == 7
    assert power_sum_bernoulli(1, 1) == 1
    assert (bernoulli_polynomial(2)(2) - bernoulli_number(2)) / 2 == 1
    assert power_sum_bernoulli(3, 2) == 9
    assert power_sum_bernoulli(7, 10) == power_sum_bruteforce(7, 10)
    with pytest.raises(ValueError):
        power_sum_bernoulli(0, 5)


def test_faulhaber_form_examples():
    assert faulhaber_form(2) == FaulhaberForm(2, Parity.EVEN, (F(1),))
    assert faulhaber_form(3) == FaulhaberForm(3, Parity.ODD, (F(1),))
    assert faulhaber_form(4).coeffs == (F(-1, 5), F(6, 5))
    for bad in (0, 1):
        with pytest.raises(ValueError, match="no Faulhaber form"):
            faulhaber_form(bad)


def test_eval_faulhaber_examples():
    assert eval_faulhaber(faulhaber_form(4), 2) == 17
    assert eval_faulhaber(faulhaber_form(5), 2) == 33
    big = eval_faulhaber(faulhaber_form(100), 10**6)
    assert big == power_sum_bernoulli(100, 10**6) and big.denominator == 1


@given(st.integers(2, 30), st.integers(1, 300))
def test_three_routes_agree(e, n):
    brute = power_sum_bruteforce(e, n)
    via_b = power_sum_bernoulli(e, n)
    via_f = eval_faulhaber(faulhaber_form(e), n)
    assert brute == via_b == via_f
    assert via_b.denominator == 1 and via_f.denominator == 1


def test_polynomial_identity_examples():
    assert faulhaber_polynomial_identity(3)
    b4 = bernoulli_polynomial(4)
    assert S1_POLY * S1_POLY == (compose_linear(b4, 1, 1) - Polynomial.constant(bernoulli_number(4))) * F(1, 4)
    assert faulhaber_polynomial_identity(2)
    assert faulhaber_polynomial_identity(21)


def test_power_sum_helpers_in_n():
    # S_1(n) = U(n + 1) and S_2 = (2n + 1) S_1 / 3
    assert S1_POLY == compose_linear(U, 1, 1)
    assert S2_POLY == S1_POLY * Polynomial((F(1, 3), F(2, 3)))
    assert S2_POLY(F(-1, 2)) == 0
