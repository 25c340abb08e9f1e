"""The Segre transform: coefficientwise product of two rational series.

For ``a = sum a_l t^l`` and ``b = sum b_l t^l`` the transform is
``sum a_l b_l t^l``. Two independent routes are provided:

* :func:`segre_oracle` expands both series over a window that provably
  contains the whole product numerator and reconstructs the h-polynomial;
* :func:`segre_closed` evaluates the bilinear double sum

      h_n(a x b) = sum_{i,j} h_i(a) h_j(b) C(b_a + j - i, n - i) C(b_b + i - j, n - j)

  directly on the h-polynomials.

The s-fold nested sum, monomial case and degree bounds build on the same
binomial product term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from .errors import HypothesisViolation, VerificationError, ZeroSeriesError
from .laurent import LaurentPoly, binomial
from .series import (
    ZERO_SERIES,
    RationalGF,
    coefficient,
    expand,
    hvector_from_coefficients,
    normalize,
)


def product_term(b1: int, b2: int, i: int, j: int, n: int) -> int:
    """``C(b1 + j - i, n - i) * C(b2 + i - j, n - j)``, the weight of ``h_i h_j`` in ``h_n``."""
    return binomial(b1 + j - i, n - i) * binomial(b2 + i - j, n - j)


def top_degree(b1: int, b2: int, i: int, j: int) -> int:
    """Largest ``n`` with a nonzero :func:`product_term` for the monomial pair ``(i, j)``."""
    if b2 + i - j >= 0 and b1 + j - i >= 0:
        return min(b1 + j, b2 + i)
    return max(b1 + j, b2 + i)


def _check_operand(x: RationalGF) -> RationalGF:
    if not isinstance(x, RationalGF):
        raise TypeError(f"expected RationalGF, got {type(x).__name__}")
    return x.canonical()


def oracle_window(a: RationalGF, b: RationalGF) -> tuple[int, int, int]:
    """``(start, stop, pole_order)`` of a coefficient window that certifies ``a x b``."""
    start = max(a.sigma, b.sigma)
    if a.pole_order == 0 or b.pole_order == 0:
        stop = min(x.r for x in (a, b) if x.pole_order == 0)
        return start, max(stop, start) + 1, 0
    d = a.pole_order + b.pole_order - 1
    top = max(a.b + b.r, b.b + a.r)
    return start, top + d + 1, d


def segre_oracle(a: RationalGF, b: RationalGF) -> RationalGF:
    """Segre transform by brute-force expansion and h-vector reconstruction."""
    a, b = _check_operand(a), _check_operand(b)
    if a.is_zero() or b.is_zero():
        return ZERO_SERIES
    start, stop, d = oracle_window(a, b)
    prods = [x * y for x, y in zip(expand(a, start, stop), expand(b, start, stop))]
    if not any(prods):
        return ZERO_SERIES
    return hvector_from_coefficients(prods, start, d)


def segre_closed(a: RationalGF, b: RationalGF) -> RationalGF:
    """Segre transform from the h-polynomials alone.

    A literal zero operand raises :class:`ZeroSeriesError`; a product that
    vanishes identically is returned as the zero series.
    """
    a, b = _check_operand(a), _check_operand(b)
    if a.is_zero() or b.is_zero():
        raise ZeroSeriesError("Segre transform with a zero operand")
    if b.pole_order == 0 and a.pole_order != 0:
        a, b = b, a
    if a.pole_order == 0:
        # a is a Laurent polynomial: h_n(a x b) = h_n(a) * b_n
        terms = {n: h * coefficient(b, n) for n, h in a.numerator.items()}
        return normalize(LaurentPoly(terms), 0)

    ba, bb = a.b, b.b
    lo = max(a.sigma, b.sigma)
    hi = max(ba + b.r, bb + a.r)
    ha, hb = list(a.numerator.items()), list(b.numerator.items())
    terms = {}
    for n in range(lo, hi + 1):
        total = Fraction(0)
        for i, x in ha:
            if i > n:
                break
            for j, y in hb:
                if j > n:
                    break
                w = product_term(ba, bb, i, j, n)
                if w:
                    total += x * y * w
        terms[n] = total
    return normalize(LaurentPoly(terms), ba + bb + 1)


def segre_monomial(d1: int, i: int, d2: int, j: int) -> RationalGF:
    """``t^i/(1-t)^d1  x  t^j/(1-t)^d2`` in closed form."""
    if d1 < 1 or d2 < 1:
        raise ValueError("segre_monomial needs d1, d2 >= 1")
    b1, b2 = d1 - 1, d2 - 1
    top = top_degree(b1, b2, i, j)
    terms = {n: product_term(b1, b2, i, j, n) for n in range(max(i, j), top + 1)}
    return normalize(LaurentPoly(terms), b1 + b2 + 1)


def segre_fold(series: Sequence[RationalGF], method: str = "closed") -> RationalGF:
    """Left fold of the pairwise transform; a vanishing partial product ends the fold."""
    if not series:
        raise ValueError("need at least one series")
    pair = {"closed": segre_closed, "oracle": segre_oracle}[method]

    def step(acc: RationalGF, x: RationalGF) -> RationalGF:
        if acc.is_zero() or x.is_zero():
            return ZERO_SERIES
        return pair(acc, x)

    return reduce(step, series[1:], series[0].canonical())


def is_admissible(a: RationalGF) -> bool:
    """``0 <= sigma <= r < d``: the hypothesis of the s-fold formulas."""
    return (not a.is_zero() and a.pole_order >= 1
            and 0 <= a.sigma and a.r < a.pole_order)


def _require_admissible(series: Sequence[RationalGF]) -> list[RationalGF]:
    if len(series) < 2:
        raise HypothesisViolation("s-fold Segre transform needs at least two series")
    out = []
    for k, x in enumerate(series):
        x = _check_operand(x)
        if not is_admissible(x):
            raise HypothesisViolation(
                f"series {x} must be nonzero with 0 <= sigma <= r < d", index=k)
        out.append(x)
    return out


def segre_multi_hvector(series: Sequence[RationalGF]) -> RationalGF:
    """h-polynomial of ``a_1 x ... x a_s`` by the s-fold nested sum.

    Writes ``B_k = b_1 + ... + b_k`` and enumerates index tuples
    ``(i_1, ..., i_{s-1}, l_2, ..., l_s)`` with ``l_k`` running over the
    support of ``a_k`` and ``i_k`` over ``[sigma_k, min(B_k + 1 - min alpha, i_{k+1})]``,
    summing ``h_{i_1}(a_1) prod_k h_{l_k}(a_k) A(i_{k-1}, l_k, i_k)`` where
    ``A(i, l, n) = C(B_{k-1} + l - i, n - i) C(b_k + i - l, n - l)``.
    Branches whose partial product is already zero are pruned.
    """
    xs = _require_admissible(series)
    s = len(xs)
    bs = [x.b for x in xs]
    alphas = [x.pole_order - x.r for x in xs]
    sigmas = [x.sigma for x in xs]
    prefix_b = [sum(bs[: k + 1]) for k in range(s)]
    # upper limit of i_k: degree bound of the k-fold partial product
    caps = [prefix_b[k] + 1 - min(alphas[: k + 1]) for k in range(s)]
    supports = [list(x.numerator.items()) for x in xs]

    def inner(k: int, ik: int, weight: Fraction) -> Fraction:
        # sum over i_{k-1}, l_k given i_k (0-based k >= 1)
        total = Fraction(0)
        hi = min(caps[k - 1], ik)
        for l, hl in supports[k]:
            for prev in range(sigmas[k - 1], hi + 1):
                w = (binomial(prefix_b[k - 1] + l - prev, ik - prev)
                     * binomial(bs[k] + prev - l, ik - l))
                if not w:
                    continue
                if k == 1:
                    total += weight * hl * w * xs[0].h(prev)
                else:
                    total += inner(k - 1, prev, weight * hl * w)
        return total

    terms = {n: inner(s - 1, n, Fraction(1)) for n in range(sigmas[-1], caps[-1] + 1)}
    return normalize(LaurentPoly(terms), prefix_b[-1] + 1)


def condition_star_star(a: RationalGF, b: RationalGF) -> bool:
    """``b_b + sigma_a - r_b >= 0`` and ``b_a + sigma_b - r_a >= 0``."""
    a, b = _check_operand(a), _check_operand(b)
    if a.is_zero() or b.is_zero():
        raise ZeroSeriesError("condition (**) needs nonzero series")
    return b.b + a.sigma - b.r >= 0 and a.b + b.sigma - a.r >= 0


def pairwise_condition(a: RationalGF, b: RationalGF) -> bool:
    """``b_b + i - j >= 0`` and ``b_a + j - i >= 0`` for every supported ``(i, j)``."""
    a, b = _check_operand(a), _check_operand(b)
    return all(b.b + i - j >= 0 and a.b + j - i >= 0
               for i in a.numerator.terms for j in b.numerator.terms)


@dataclass(frozen=True)
class BoundsReport:
    """Degree bounds for a (multi-)Segre product and the degree actually attained.

    ``upper_max`` always bounds ``actual_degree``; ``upper_min`` bounds it
    under (**) and is attained when moreover all inputs have nonnegative
    h-coefficients. ``admissible`` records ``0 <= sigma <= r < d`` on every
    input, which forces (**).
    """

    upper_max: int
    upper_min: int
    star_star_holds: bool
    nonneg_inputs: bool
    actual_degree: int
    equality_attained: bool
    admissible: bool

    def as_dict(self) -> dict:
        return {
            "upper_max": self.upper_max,
            "upper_min": self.upper_min,
            "star_star_holds": self.star_star_holds,
            "nonneg_inputs": self.nonneg_inputs,
            "actual_degree": self.actual_degree,
            "equality_attained": self.equality_attained,
            "admissible": self.admissible,
        }


def _check_bounds(report: BoundsReport) -> BoundsReport:
    if report.actual_degree > report.upper_max:
        raise VerificationError("degree exceeds the general upper bound",
                                report.upper_max, report.actual_degree)
    if report.admissible and not report.star_star_holds:
        raise VerificationError("admissible inputs must satisfy (**)", True, False)
    if report.star_star_holds:
        if report.actual_degree > report.upper_min:
            raise VerificationError("degree exceeds the (**) bound",
                                    report.upper_min, report.actual_degree)
        if report.nonneg_inputs and not report.equality_attained:
            raise VerificationError("(**) with nonnegative h must attain the bound",
                                    report.upper_min, report.actual_degree)
    return report


def _require_positive_pole(xs: Sequence[RationalGF]) -> list[RationalGF]:
    out = []
    for k, x in enumerate(xs):
        x = _check_operand(x)
        if x.is_zero() or x.pole_order < 1:
            raise HypothesisViolation("degree bounds need nonzero series with d >= 1", index=k)
        out.append(x)
    return out


def segre_degree_bounds(a: RationalGF, b: RationalGF) -> BoundsReport:
    a, b = _require_positive_pole([a, b])
    actual = segre_closed(a, b).r
    upper_min = min(a.b + b.r, b.b + a.r)
    report = BoundsReport(
        upper_max=max(a.b + b.r, b.b + a.r),
        upper_min=upper_min,
        star_star_holds=condition_star_star(a, b),
        nonneg_inputs=a.nonnegative_h() and b.nonnegative_h(),
        actual_degree=actual,
        equality_attained=actual == upper_min,
        admissible=all(0 <= x.sigma <= x.r <= x.b for x in (a, b)),
    )
    return _check_bounds(report)


def multi_degree_bounds(series: Sequence[RationalGF]) -> BoundsReport:
    """s-fold bounds: ``B + 1 - min alpha`` always, ``B + 1 - max alpha`` under chained (**)."""
    xs = _require_positive_pole(series)
    if len(xs) < 2:
        raise HypothesisViolation("multi_degree_bounds needs at least two series")
    total = sum(x.b for x in xs) + 1
    alphas = [x.pole_order - x.r for x in xs]
    chained = True
    acc = xs[0]
    for x in xs[1:]:
        chained = chained and condition_star_star(acc, x)
        acc = segre_closed(acc, x)
    upper_min = total - max(alphas)
    report = BoundsReport(
        upper_max=total - min(alphas),
        upper_min=upper_min,
        star_star_holds=chained,
        nonneg_inputs=all(x.nonnegative_h() for x in xs),
        actual_degree=acc.r,
        equality_attained=acc.r == upper_min,
        admissible=all(is_admissible(x) for x in xs),
    )
    return _check_bounds(report)
