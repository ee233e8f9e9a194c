"""Command-line entry point.

    faulhaber bern <j>
    faulhaber poly bernoulli <m> [--basis x|centered|u]
    faulhaber faulhaber <exponent>
    faulhaber eval <exponent> <n> [--method brute|bernoulli|faulhaber]
    faulhaber verify [--max-m M] [--only T2-even,T2-odd,T3]

Every subcommand takes --format plain|json|latex. Exit status is 0 on
success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import render
from .bernoulli import bernoulli_number, bernoulli_polynomial
from .forms import eval_faulhaber, faulhaber_form, power_sum_bernoulli, power_sum_bruteforce
from .polynomial import to_centered, to_u_basis
from .verify import parse_only, sweep


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=render.FORMATS, default="plain")

    parser = argparse.ArgumentParser(prog="faulhaber", description="Exact Bernoulli numbers, power sums and Faulhaber forms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bern", parents=[common], help="Bernoulli number B_j")
    p.add_argument("j", type=_nonneg)

    p = sub.add_parser("poly", parents=[common], help="Bernoulli polynomial in a chosen basis")
    p.add_argument("kind", choices=["bernoulli"])
    p.add_argument("m", type=_nonneg)
    p.add_argument("--basis", choices=["x", "centered", "u"], default="x")

    p = sub.add_parser("faulhaber", parents=[common], help="Faulhaber form of S_exponent")
    p.add_argument("exponent", type=_nonneg)

    p = sub.add_parser("eval", parents=[common], help="evaluate S_exponent(n) exactly")
    p.add_argument("exponent", type=_nonneg)
    p.add_argument("n", type=_positive)
    p.add_argument("--method", choices=["brute", "bernoulli", "faulhaber"], default="bernoulli")

    p = sub.add_parser("verify", parents=[common], help="run the theorem verification sweep")
    p.add_argument("--max-m", type=_positive, default=40)
    p.add_argument("--only", default=None, help="comma list of T2-even, T2-odd, T3 (or T3-even, T3-odd)")
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_bernoulli(j: int, fmt: str) -> str:
    b = bernoulli_number(j)
    if fmt == "json":
        return render.dump_json({"index": j, **render.rational_json(b)})
    if fmt == "latex":
        return f"B_{{{j}}} = {render.rational_latex(b)}"
    return render.rational_plain(b)


def cmd_poly(m: int, basis: str, fmt: str) -> str:
    p = bernoulli_polynomial(m)
    if basis == "u":
        split = to_u_basis(p)
        if fmt == "json":
            return render.dump_json({
                "kind": "bernoulli", "m": m, "basis": "u",
                "even": [render.rational_json(c) for c in split.even.coeffs],
                "odd": [render.rational_json(c) for c in split.odd.coeffs],
            })
        if fmt == "latex":
            return f"B_{{{m}}}(x) = {render.usplit_latex(split)}"
        return render.usplit_plain(split)
    if basis == "centered":
        p = to_centered(p)
    if fmt == "json":
        return render.dump_json({
            "kind": "bernoulli", "m": m, "basis": basis,
            "coeffs": [render.rational_json(c) for c in p.coeffs],
        })
    if fmt == "latex":
        return f"B_{{{m}}}(x) = {render.poly_latex(p)}"
    return render.poly_plain(p)


def cmd_faulhaber(exponent: int, fmt: str) -> str:
    form = faulhaber_form(exponent)
    if fmt == "json":
        return render.dump_json(render.form_json(form))
    if fmt == "latex":
        return render.form_latex(form)
    return render.form_plain(form)


def cmd_eval(exponent: int, n: int, method: str, fmt: str) -> str:
    if method == "brute":
        value = Fraction(power_sum_bruteforce(exponent, n))
    elif method == "bernoulli":
        value = power_sum_bernoulli(exponent, n)
    else:
        value = eval_faulhaber(faulhaber_form(exponent), n)
    if value.denominator != 1:
        raise ArithmeticError(f"power sum came out non-integral: {value}")
    digits = str(value.numerator)
    if fmt == "json":
        return render.dump_json({"exponent": exponent, "n": str(n), "method": method, "value": digits})
    if fmt == "latex":
        return f"S_{{{exponent}}}({n}) = {digits}"
    return digits


def cmd_verify(max_m: int, which: tuple[str, ...], fmt: str, jobs: int = 1) -> tuple[str, bool]:
    reports = sweep(max_m, which, jobs)
    ok = all(r.verdict for r in reports)
    if fmt == "json":
        doc = {
            "max_m": max_m,
            "theorems": list(which),
            "all_pass": ok,
            "reports": [r.to_dict() for r in reports],
        }
        return render.dump_json(doc), ok
    if fmt == "latex":
        rows = [rf"\text{{{r.theorem_id}}} & {r.m} & \text{{{'pass' if r.verdict else 'FAIL'}}} \\" for r in reports]
        body = "\n".join([r"\begin{array}{lrl}", r"\text{theorem} & m & \text{verdict} \\ \hline", *rows, r"\end{array}"])
        return body, ok
    lines = [f"{'theorem':<9} {'m':>3}  verdict"]
    for r in reports:
        line = f"{r.theorem_id:<9} {r.m:>3}  {'pass' if r.verdict else 'FAIL'}"
        if not r.verdict:
            line += "  [" + ", ".join(c.name for c in r.checks if not c.passed) + "]"
        lines.append(line)
    lines.append(f"all_pass: {'true' if ok else 'false'} (verified for m <= {max_m})")
    return "\n".join(lines), ok


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format

    if args.command == "bern":
        _emit(cmd_bernoulli(args.j, fmt))
    elif args.command == "poly":
        _emit(cmd_poly(args.m, args.basis, fmt))
    elif args.command == "faulhaber":
        if args.exponent < 2:
            parser.error("S_0 and S_1 have no Faulhaber form; use `eval` with --method brute or bernoulli")
        _emit(cmd_faulhaber(args.exponent, fmt))
    elif args.command == "eval":
        if args.method == "faulhaber" and args.exponent < 2:
            parser.error("--method faulhaber needs exponent >= 2")
        if args.method == "bernoulli" and args.exponent < 1:
            parser.error("--method bernoulli needs exponent >= 1; use --method brute for S_0")
        _emit(cmd_eval(args.exponent, args.n, args.method, fmt))
    elif args.command == "verify":
        try:
            which = parse_only(args.only)
        except ValueError as exc:
            parser.error(str(exc))
        text, ok = cmd_verify(args.max_m, which, fmt, args.jobs)
        _emit(text)
        return 0 if ok else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
