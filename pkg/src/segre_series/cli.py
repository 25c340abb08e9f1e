"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 theorem hypothesis or operation
precondition violated, 4 a closed form disagreed with its cross-check.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import __version__
from .cm import (
    coefficient_check,
    newcomb,
    newcomb_oracle_row,
    newcomb_row,
    NewcombQuery,
    segre_regularity_cm,
    segre_veronese_regularity,
    veronese,
    veronese_window,
    zero_dim_segre_report,
)
from .errors import HypothesisViolation, VerificationError, WindowTooShort, ZeroSeriesError
from .fileformat import (
    ParseError,
    load_coefficients,
    load_module,
    load_raw_series,
    load_series,
    series_to_obj,
)
from .laurent import format_coefficient
from .segre import (
    multi_degree_bounds,
    segre_closed,
    segre_degree_bounds,
    segre_fold,
    segre_monomial,
    segre_multi_hvector,
    segre_oracle,
)
from .series import (
    RationalGF,
    coefficient,
    expand,
    hilbert_polynomial,
    hvector_from_coefficients,
    postulation_number,
)

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_VERIFY = 0, 2, 3, 4


@dataclass
class RunReport:
    command: str
    text: str
    data: Any
    verification: str = "skipped"
    detail: dict = field(default_factory=dict)
    elapsed_us: int = 0

    def render(self, fmt: str) -> str:
        if fmt == "json":
            ver = {"status": self.verification, **self.detail}
            return json.dumps({"command": self.command, "result": self.data,
                               "verification": ver, "elapsed_us": self.elapsed_us})
        lines = [f"command: {self.command}", self.text, f"verification: {self.verification}"]
        if self.detail:
            lines.append(f"  expected: {self.detail.get('expected')}")
            lines.append(f"  actual:   {self.detail.get('actual')}")
        return "\n".join(lines)


def _fmt_list(values) -> str:
    return ", ".join(format_coefficient(v) for v in values)


def _check(cond: bool, what: str, expected, actual) -> None:
    if not cond:
        raise VerificationError(what, expected, actual)


def _series_report(cmd: str, a: RationalGF, verified: bool) -> RunReport:
    return RunReport(cmd, f"result: {a}", series_to_obj(a),
                     "passed" if verified else "skipped")


def cmd_normalize(args) -> RunReport:
    raw = load_raw_series(args.file)
    a = raw.canonical()
    if args.verify and not a.is_zero():
        lo, hi = a.sigma - 2, a.r + raw.pole_order + 10
        before, after = expand(raw, lo, hi), expand(a, lo, hi)
        _check(before == after, "normalize preserves the series",
               _fmt_list(before), _fmt_list(after))
    return _series_report("normalize", a, args.verify)


def cmd_expand(args) -> RunReport:
    a = load_series(args.file)
    if args.start > args.stop:
        raise ParseError(f"--from {args.start} exceeds --to {args.stop}")
    coeffs = expand(a, args.start, args.stop)
    if args.verify:
        direct = [coefficient(a, k) for k in range(args.start, args.stop + 1)]
        _check(direct == coeffs, "expansion vs binomial convolution",
               _fmt_list(direct), _fmt_list(coeffs))
    return RunReport("expand", f"result: {_fmt_list(coeffs)}",
                     {"from": args.start, "to": args.stop,
                      "coefficients": [format_coefficient(c) for c in coeffs]},
                     "passed" if args.verify else "skipped")


def cmd_hvector(args) -> RunReport:
    coeffs = load_coefficients(args.coeffs)
    if args.pole_order < 0:
        raise ParseError("--pole-order must be >= 0")
    a = hvector_from_coefficients(coeffs, args.start, args.pole_order)
    if args.verify:
        back = expand(a, args.start, args.start + len(coeffs) - 1)
        _check(back == coeffs, "re-expansion reproduces the window",
               _fmt_list(coeffs), _fmt_list(back))
    return _series_report("hvector", a, args.verify)


def cmd_segre(args) -> RunReport:
    a, b = load_series(args.file_a), load_series(args.file_b)
    check = args.verify or args.method == "both"
    if args.method == "oracle":
        result = segre_oracle(a, b)
        other = segre_closed(a, b) if check else None
    else:
        result = segre_closed(a, b)
        other = segre_oracle(a, b) if check else None
    if check:
        _check(result == other, "closed form vs oracle", other, result)
    return _series_report("segre", result, check)


def cmd_segre_multi(args) -> RunReport:
    series = [load_series(f) for f in args.files]
    result = segre_multi_hvector(series)
    if args.verify:
        folded = segre_fold(series, "closed")
        _check(result == folded, "s-fold sum vs folded pairwise closed form", folded, result)
        oracle = segre_fold(series, "oracle")
        _check(result == oracle, "s-fold sum vs folded oracle", oracle, result)
    return _series_report("segre-multi", result, args.verify)


def cmd_monomial(args) -> RunReport:
    if args.d1 < 1 or args.d2 < 1:
        raise ParseError("--d1 and --d2 must be >= 1")
    result = segre_monomial(args.d1, args.i, args.d2, args.j)
    if args.verify:
        oracle = segre_oracle(RationalGF.of({args.i: 1}, args.d1),
                              RationalGF.of({args.j: 1}, args.d2))
        _check(result == oracle, "monomial closed form vs oracle", oracle, result)
    return _series_report("monomial", result, args.verify)


def cmd_veronese(args) -> RunReport:
    a = load_series(args.file)
    if args.n < 1:
        raise ParseError("--n must be >= 1")
    result = veronese(a, args.n)
    if args.verify and not a.is_zero():
        length = veronese_window(a, args.n) + 10
        _check(coefficient_check(a, result, args.n, length),
               "Veronese coefficients match a_{nl}", "match", "mismatch")
    return _series_report("veronese", result, args.verify)


def cmd_postulation(args) -> RunReport:
    a = load_series(args.file)
    beta = postulation_number(a)
    if args.verify:
        phi = hilbert_polynomial(a)
        for n in range(beta + 1, beta + 21):
            _check(coefficient(a, n) == phi(n), f"a_{n} equals the Hilbert polynomial",
                   phi(n), coefficient(a, n))
        _check(coefficient(a, beta) != phi(beta), f"a_{beta} differs from the Hilbert polynomial",
               "different", phi(beta))
    return RunReport("postulation", f"result: {beta}", beta,
                     "passed" if args.verify else "skipped")


def cmd_hilbert_poly(args) -> RunReport:
    a = load_series(args.file)
    phi = hilbert_polynomial(a)
    if args.verify and not a.is_zero():
        beta = postulation_number(a)
        for n in range(beta + 1, beta + 21):
            _check(coefficient(a, n) == phi(n), f"Phi({n})", coefficient(a, n), phi(n))
    return RunReport("hilbert-poly", f"result: {phi}",
                     {"coefficients": [format_coefficient(c) for c in phi.coefficients]},
                     "passed" if args.verify else "skipped")


def cmd_bounds(args) -> RunReport:
    series = [load_series(f) for f in args.files]
    if len(series) < 2:
        raise ParseError("bounds needs at least two series files")
    if len(series) == 2:
        report = segre_degree_bounds(*series)
    else:
        report = multi_degree_bounds(series)
    if args.verify:
        actual = segre_fold(series, "oracle").r
        _check(actual == report.actual_degree, "degree of the product via the oracle",
               actual, report.actual_degree)
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}"
                     for k, v in report.as_dict().items())
    return RunReport("bounds", text, report.as_dict(), "passed" if args.verify else "skipped")


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


def cmd_regularity(args) -> RunReport:
    modules = [load_module(f) for f in args.files]
    if any(m.dim == 0 for m in modules):
        if args.veronese:
            raise ParseError("--veronese does not apply to families with a zero-dimensional module")
        report = zero_dim_segre_report(modules)
        data = {"value": report.value, "mode": "zero-dim", "attained": report.attained,
                "product": series_to_obj(report.product)}
        text = (f"result: {report.value}\nmode: zero-dim\nproduct: {report.product}\n"
                f"attained: {str(report.attained).lower()}")
        return RunReport("regularity", text, data, "passed" if args.verify else "skipped")
    if args.veronese:
        ns = _parse_int_list(args.veronese, "--veronese")
        if len(ns) != len(modules) or any(n < 1 for n in ns):
            raise ParseError("--veronese needs one integer >= 1 per module")
        value = segre_veronese_regularity(modules, ns, verify=args.verify)
        mode = "segre-veronese"
    else:
        value = segre_regularity_cm(modules, verify=args.verify)
        mode = "segre"
    return RunReport("regularity", f"result: {value}\nmode: {mode}",
                     {"value": value, "mode": mode}, "passed" if args.verify else "skipped")


def cmd_newcomb(args) -> RunReport:
    b = _parse_int_list(args.b, "--b")
    if any(x < 0 for x in b):
        raise ParseError("--b entries must be >= 0")
    row = newcomb_row(b)
    if args.verify:
        oracle = newcomb_oracle_row(b)
        _check(row == oracle, "Newcomb numbers vs Segre product h-vector", oracle, row)
    if args.k is not None:
        value = newcomb(NewcombQuery(tuple(b), args.k))
        return RunReport("newcomb", f"result: {value}", {"b": b, "k": args.k, "value": value},
                         "passed" if args.verify else "skipped")
    text = "\n".join(f"{k}: {v}" for k, v in enumerate(row))
    return RunReport("newcomb", text, {"b": b, "row": row},
                     "passed" if args.verify else "skipped")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--verify", action="store_true",
                        help="cross-check the result by an independent route")

    parser = argparse.ArgumentParser(
        prog="segre-series",
        description="Exact Segre and Veronese transforms of rational Hilbert series.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("normalize", cmd_normalize, "print the canonical form of a series")
    p.add_argument("file")
    p = add("expand", cmd_expand, "list coefficients a_from .. a_to")
    p.add_argument("file")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p = add("hvector", cmd_hvector, "rebuild a series from a coefficient window")
    p.add_argument("--coeffs", required=True, help="JSON array of coefficients")
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--pole-order", type=int, required=True)
    p = add("segre", cmd_segre, "Segre transform of two series")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--method", choices=("closed", "oracle", "both"), default="closed")
    p = add("segre-multi", cmd_segre_multi, "s-fold Segre transform (0 <= sigma <= r < d)")
    p.add_argument("files", nargs="+")
    p = add("monomial", cmd_monomial, "t^i/(1-t)^d1 x t^j/(1-t)^d2")
    for flag in ("--d1", "--i", "--d2", "--j"):
        p.add_argument(flag, type=int, required=True)
    p = add("veronese", cmd_veronese, "n-th Veronese transform a_{nl}")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p = add("postulation", cmd_postulation, "postulation number deg h - d")
    p.add_argument("file")
    p = add("hilbert-poly", cmd_hilbert_poly, "Hilbert polynomial, ascending coefficients")
    p.add_argument("file")
    p = add("bounds", cmd_bounds, "degree bounds of a (multi-)Segre product")
    p.add_argument("files", nargs="+")
    p = add("regularity", cmd_regularity, "regularity of a Segre product of CM modules")
    p.add_argument("files", nargs="+")
    p.add_argument("--veronese", help="comma-separated Veronese degrees, one per module")
    p = add("newcomb", cmd_newcomb, "Simon Newcomb numbers A([b], k)")
    p.add_argument("--b", required=True, help="comma-separated b_1,...,b_n")
    p.add_argument("--k", type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (HypothesisViolation, ZeroSeriesError, WindowTooShort) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except VerificationError as exc:
        report = RunReport(args.command, f"error: {exc}", None, "FAILED",
                           {"expected": str(exc.expected), "actual": str(exc.actual)})
        print(report.render(args.format))
        return EXIT_VERIFY
    report.elapsed_us = int((time.perf_counter() - started) * 1e6)
    print(report.render(args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
