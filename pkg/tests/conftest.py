from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from faulhaber.polynomial import Basis, Polynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-50, max_value=50)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=30))


def polynomials(max_degree=12, basis=Basis.X):
    return st.lists(rationals, max_size=max_degree + 1).map(lambda cs: Polynomial(tuple(cs), basis))


# acceptance results, printed in the terminal summary
ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = ""):
        ACCEPTANCE.append((name, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
