"""Plain-text, LaTeX and JSON renderings of rationals, polynomials and forms.

Plain and LaTeX output list terms in ascending degree with explicit signs.
LaTeX output is a bare display-math body (no delimiters, no preamble).
JSON never carries big integers as numbers, only as decimal strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Sequence

from .forms import FaulhaberForm, Parity
from .polynomial import Basis, Polynomial, USplit

FORMATS = ("plain", "json", "latex")


def rational_plain(q: Fraction) -> str:
    return str(q)


def rational_latex(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def rational_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2)


def _monomial_plain(var: str) -> Callable[[int], str]:
    return lambda k: "" if k == 0 else var if k == 1 else f"{var}^{k}"


def _monomial_latex(var: str) -> Callable[[int], str]:
    return lambda k: "" if k == 0 else var if k == 1 else f"{var}^{{{k}}}"


_PLAIN_VARS = {Basis.X: "x", Basis.CENTERED: "(x - 1/2)", Basis.U: "U"}
_LATEX_VARS = {Basis.X: "x", Basis.CENTERED: r"\left(x - \frac{1}{2}\right)", Basis.U: "U(x)"}


def _join(coeffs: Sequence[Fraction], mono: Callable[[int], str], latex: bool) -> str:
    pieces = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        m = mono(k)
        mag = abs(c)
        if m and mag == 1:
            body = m
        elif m:
            body = f"{rational_latex(mag)} {m}" if latex else f"{mag}*{m}"
        else:
            body = rational_latex(mag) if latex else str(mag)
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(pieces) if pieces else "0"


def poly_plain(p: Polynomial) -> str:
    return _join(p.coeffs, _monomial_plain(_PLAIN_VARS[p.basis]), latex=False)


def poly_latex(p: Polynomial) -> str:
    return _join(p.coeffs, _monomial_latex(_LATEX_VARS[p.basis]), latex=True)


def usplit_plain(split: USplit) -> str:
    parts = []
    if not split.even.is_zero():
        parts.append(poly_plain(split.even))
    if not split.odd.is_zero():
        parts.append(f"(x - 1/2)*({poly_plain(split.odd)})")
    return " + ".join(parts) if parts else "0"


def usplit_latex(split: USplit) -> str:
    parts = []
    if not split.even.is_zero():
        parts.append(poly_latex(split.even))
    if not split.odd.is_zero():
        parts.append(rf"\left(x - \frac{{1}}{{2}}\right)\left({poly_latex(split.odd)}\right)")
    return " + ".join(parts) if parts else "0"


def form_plain(form: FaulhaberForm) -> str:
    inner = _join(form.coeffs, _monomial_plain("S_1"), latex=False)
    return f"S_{form.exponent} = {form.prefactor}*({inner})"


def form_latex(form: FaulhaberForm) -> str:
    inner = _join(form.coeffs, _monomial_latex("S_{1}"), latex=True)
    pre = "S_{2}" if form.parity is Parity.EVEN else "S_{1}^{2}"
    return rf"S_{{{form.exponent}}} = {pre}\left({inner}\right)"


def form_json(form: FaulhaberForm) -> dict:
    return {
        "exponent": form.exponent,
        "parity": form.parity.value,
        "prefactor": form.prefactor,
        "coeffs": [rational_json(c) for c in form.coeffs],
    }
