"""Exact Bernoulli numbers, U-basis expansions and Faulhaber forms of power sums."""

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .forms import (
    FaulhaberForm,
    coeff_b,
    coeff_c,
    eval_faulhaber,
    faulhaber_form,
    hat_b_even,
    hat_b_odd,
    power_sum_bernoulli,
    power_sum_bruteforce,
)
from .polynomial import Basis, Polynomial, to_u_basis
from .verify import check_symmetry, sweep

__version__ = "0.1.0"
