"""Instance-level verification of the symmetry and Faulhaber theorems.

Every check here is an exact computation for one index m; a sweep
reports what was verified up to a bound and claims nothing beyond it.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .bernoulli import bernoulli_number, bernoulli_polynomial
from .forms import (
    S2_POLY,
    faulhaber_form,
    faulhaber_polynomial_identity,
    u_decomposition,
)
from .polynomial import (
    HALF,
    Basis,
    Polynomial,
    compose_linear,
    derivative,
    evaluate,
    from_u_basis,
    to_power,
    to_u_basis,
)

__all__ = [
    "SymmetryKind",
    "SymmetryReport",
    "Check",
    "TheoremReport",
    "THEOREM_IDS",
    "SweepConfig",
    "check_symmetry",
    "verify_theorem2_even",
    "verify_theorem2_odd",
    "verify_theorem3_even",
    "verify_theorem3_odd",
    "verify_theorem3",
    "sweep",
    "parse_only",
]


class SymmetryKind(Enum):
    LINE = "line"
    POINT = "point"


@dataclass(frozen=True)
class SymmetryReport:
    center: Fraction
    kind: SymmetryKind
    orders_checked: tuple[int, ...]
    failures: tuple[tuple[int, Fraction], ...]
    reflection_holds: bool

    @property
    def verdict(self) -> bool:
        return not self.failures

    @property
    def methods_agree(self) -> bool:
        return self.verdict == self.reflection_holds


def check_symmetry(p: Polynomial, s, kind: SymmetryKind) -> SymmetryReport:
    """Symmetry about x = s by the derivative criterion, cross-checked.

    Line symmetry: every odd-order derivative vanishes at s.
    Point symmetry about (s, p(s)): every even-order derivative of order
    >= 2 vanishes at s. The reflection identity p(s + x) = +-p(s - x)
    (shifted by p(s) for points) is evaluated independently.
    """
    p = to_power(p)
    if p.degree <= 1:
        raise ValueError("symmetry criterion requires degree > 1")
    s = Fraction(s)
    start = 1 if kind is SymmetryKind.LINE else 2
    orders = tuple(range(start, p.degree + 1, 2))

    failures = []
    d, order = p, 0
    for i in orders:
        d = derivative(d, i - order)
        order = i
        v = evaluate(d, s)
        if v != 0:
            failures.append((i, v))

    right = compose_linear(p, 1, s)
    left = compose_linear(p, -1, s)
    if kind is SymmetryKind.LINE:
        reflection = right == left
    else:
        fs = Polynomial.constant(evaluate(p, s))
        reflection = right - fs == fs - left
    return SymmetryReport(s, kind, orders, tuple(failures), reflection)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str = ""


THEOREM_IDS = ("T2-even", "T2-odd", "T3-even", "T3-odd")
_MIN_M = {"T2-even": 2, "T2-odd": 1, "T3-even": 1, "T3-odd": 1, "T3": 1}


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    m: int
    checks: tuple[Check, ...]

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "m": self.m,
            "verdict": self.verdict,
            "checks": [asdict(c) for c in self.checks],
        }


def _fmt(values: Iterable[Fraction]) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"


def _require(theorem_id: str, m: int) -> None:
    if m < _MIN_M[theorem_id]:
        raise ValueError(f"{theorem_id} needs m >= {_MIN_M[theorem_id]}, got m={m}")


def _symmetry_check(name: str, report: SymmetryReport) -> Check:
    witness = "" if report.verdict else f"failures={[(i, str(v)) for i, v in report.failures]}"
    if not report.methods_agree:
        witness += " derivative and reflection methods disagree"
    return Check(name, report.verdict and report.methods_agree, witness.strip())


def verify_theorem2_even(m: int) -> TheoremReport:
    """B_{2m}(x) = B_{2m} + sum_{j=2}^{m} hat_j U(x)^j."""
    _require("T2-even", m)
    poly = bernoulli_polynomial(2 * m)
    split = to_u_basis(poly)
    closed = u_decomposition(2 * m)
    expanded = tuple(split.even.coeff(j) for j in range(m + 1))
    violations = closed.structural_violations()
    checks = (
        Check("odd_part_zero", split.odd.is_zero(), _fmt(split.odd.coeffs)),
        Check("structural_pattern", not violations, "; ".join(violations) or _fmt(closed.hat_coeffs)),
        Check("closed_form_matches_expansion", expanded == closed.hat_coeffs
              and split.even.degree <= m, _fmt(expanded)),
        _symmetry_check("line_symmetry_at_half", check_symmetry(poly, HALF, SymmetryKind.LINE)),
    )
    return TheoremReport("T2-even", m, checks)


def verify_theorem2_odd(m: int) -> TheoremReport:
    """B_{2m+1}(x) = (x - 1/2) sum_{j=1}^{m} hat_j U(x)^j."""
    _require("T2-odd", m)
    poly = bernoulli_polynomial(2 * m + 1)
    split = to_u_basis(poly)
    closed = u_decomposition(2 * m + 1)
    expanded = tuple(split.odd.coeff(j) for j in range(m + 1))
    violations = closed.structural_violations()
    value_at_half = evaluate(poly, HALF)
    checks = (
        Check("even_part_zero", split.even.is_zero(), _fmt(split.even.coeffs)),
        Check("structural_pattern", not violations, "; ".join(violations) or _fmt(closed.hat_coeffs)),
        Check("closed_form_matches_expansion", expanded == closed.hat_coeffs
              and split.odd.degree <= m, _fmt(expanded)),
        _symmetry_check("point_symmetry_at_half", check_symmetry(poly, HALF, SymmetryKind.POINT)),
        Check("vanishes_at_half", value_at_half == 0, str(value_at_half)),
    )
    return TheoremReport("T2-odd", m, checks)


def verify_theorem3_even(m: int) -> TheoremReport:
    """S_{2m} = S_2 F_{2m}(S_1), and the converse forcing B_{2m+1} = 0."""
    _require("T3-even", m)
    form = faulhaber_form(2 * m)
    b_odd = bernoulli_number(2 * m + 1)
    # converse: at n = -1/2 the prefactor S_2 vanishes, so the identity
    # (2m+1) S_2 F(S_1) = B_{2m+1}(n + 1) - B_{2m+1} gives B_{2m+1}(1/2) = B_{2m+1}
    lhs_at = (2 * m + 1) * evaluate(form.as_polynomial_in_n(), -HALF)
    rhs_at = evaluate(bernoulli_polynomial(2 * m + 1), HALF) - b_odd
    # the half-argument relation gives B(1/2) = (2^{-2m} - 1) B; together
    # these say (2^{-2m} - 2) B = 0, and the factor is never zero
    factor = Fraction(1, 4**m) - 2
    checks = (
        Check("polynomial_identity", faulhaber_polynomial_identity(2 * m), _fmt(form.coeffs)),
        Check("S2_vanishes_at_minus_half", evaluate(S2_POLY, -HALF) == 0),
        Check("identity_at_minus_half", lhs_at == 0 and rhs_at == 0, f"lhs={lhs_at} rhs={rhs_at}"),
        Check("forces_B_odd_zero", factor != 0 and factor * b_odd == 0 and b_odd == 0, f"B_{2 * m + 1}={b_odd}"),
    )
    return TheoremReport("T3-even", m, checks)


def verify_theorem3_odd(m: int) -> TheoremReport:
    """S_{2m+1} = S_1^2 F_{2m+1}(S_1), with a converse through U-symmetry.

    Since S_1(n) = U(n + 1), the form implies
    B_{2m+2}(x) = B_{2m+2} + (2m + 2) U(x)^2 F(U(x)), a pure U-polynomial.
    Its line symmetry at 1/2 kills every odd derivative there, hence every
    B_r(1/2) with r odd, hence B_r for odd r >= 3.
    """
    _require("T3-odd", m)
    form = faulhaber_form(2 * m + 1)
    u_coeffs = (bernoulli_number(2 * m + 2), 0) + tuple((2 * m + 2) * c for c in form.coeffs)
    rebuilt = from_u_basis(Polynomial(u_coeffs, Basis.U), Polynomial((), Basis.U))
    target = bernoulli_polynomial(2 * m + 2)
    sym = check_symmetry(rebuilt, HALF, SymmetryKind.LINE)
    odd_rs = range(3, 2 * m + 2, 2)
    # B^{(i)}_{2m+2}(1/2) = 0 for odd i means B_r(1/2) = 0 for r = 2m + 2 - i
    halves = {r: evaluate(bernoulli_polynomial(r), HALF) for r in odd_rs}
    forced = all(halves[r] == 0 and (Fraction(2, 2**r) - 1) != 0 and bernoulli_number(r) == 0 for r in odd_rs)
    checks = (
        Check("polynomial_identity", faulhaber_polynomial_identity(2 * m + 1), _fmt(form.coeffs)),
        Check("u_polynomial_matches_bernoulli", rebuilt == target),
        _symmetry_check("line_symmetry_at_half", sym),
        Check("forces_B_odd_zero", forced, _fmt(bernoulli_number(r) for r in odd_rs)),
    )
    return TheoremReport("T3-odd", m, checks)


def verify_theorem3(m: int) -> TheoremReport:
    """Both parities of the Faulhaber equivalence as one report."""
    _require("T3", m)
    checks = tuple(
        Check(f"{r.theorem_id}:{c.name}", c.passed, c.witness)
        for r in (verify_theorem3_even(m), verify_theorem3_odd(m))
        for c in r.checks
    )
    return TheoremReport("T3", m, checks)


_VERIFIERS = {
    "T2-even": verify_theorem2_even,
    "T2-odd": verify_theorem2_odd,
    "T3-even": verify_theorem3_even,
    "T3-odd": verify_theorem3_odd,
}


def parse_only(text: str | None) -> tuple[str, ...]:
    """Theorem ids from a comma list; 'T3' expands to both parities."""
    if not text or text == "all":
        return THEOREM_IDS
    chosen = set()
    for tok in (t.strip() for t in text.split(",")):
        if tok == "T3":
            chosen |= {"T3-even", "T3-odd"}
        elif tok in _VERIFIERS:
            chosen.add(tok)
        else:
            raise ValueError(f"unknown theorem id {tok!r}; choose from T2-even, T2-odd, T3, T3-even, T3-odd")
    return tuple(t for t in THEOREM_IDS if t in chosen)


@dataclass(frozen=True)
class SweepConfig:
    max_m: int = 40
    which: tuple[str, ...] = THEOREM_IDS
    jobs: int = 1


def _run(task: tuple[str, int]) -> TheoremReport:
    theorem_id, m = task
    return _VERIFIERS[theorem_id](m)


def sweep(max_m: int, which: Sequence[str] = THEOREM_IDS, jobs: int = 1) -> list[TheoremReport]:
    """Run every requested check for each admissible m <= max_m.

    Reports come back ordered by (theorem id, m) whatever ``jobs`` is.
    """
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    tasks = [(t, m) for t in sorted(set(which)) for m in range(_MIN_M[t], max_m + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(t) for t in tasks]


def run_config(cfg: SweepConfig) -> list[TheoremReport]:
    return sweep(cfg.max_m, cfg.which, cfg.jobs)
