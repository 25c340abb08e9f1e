"""Rational generating functions ``h(t) / (1 - t)^d`` with ``h`` a Laurent polynomial.

Coefficients are recovered from the h-polynomial by the binomial convolution

    a_k = sum_i h_i * C(d - 1 + k - i, k - i)

and the h-polynomial from a window of coefficients by

    h_n = sum_k (-1)^k * C(d, k) * a_{n-k}.

A series is *canonical* when ``d == 0`` or ``h(1) != 0``; every operation in
this package returns canonical series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import WindowTooShort, ZeroSeriesError
from .laurent import ZERO, Coeff, LaurentPoly, binomial, format_poly, one_minus_t_power


@dataclass(frozen=True)
class RationalGF:
    """The formal Laurent series ``numerator / (1 - t)^pole_order``.

    Direct construction keeps the given representation; use :func:`normalize`
    (or :meth:`canonical`) to obtain the unique canonical representative.
    """

    numerator: LaurentPoly
    pole_order: int = 0

    def __post_init__(self):
        if not isinstance(self.numerator, LaurentPoly):
            raise TypeError("numerator must be a LaurentPoly")
        if isinstance(self.pole_order, bool) or not isinstance(self.pole_order, int):
            raise TypeError("pole_order must be an int")
        if self.pole_order < 0:
            raise ValueError(f"pole_order must be >= 0, got {self.pole_order}")

    @classmethod
    def of(cls, coeffs: dict[int, Coeff] | Sequence[Coeff], pole_order: int = 0) -> RationalGF:
        """Canonical series from ``{exponent: coeff}`` or a dense list starting at ``t^0``."""
        if isinstance(coeffs, dict):
            num = LaurentPoly(coeffs)
        else:
            num = LaurentPoly.from_coeffs(coeffs)
        return normalize(num, pole_order)

    @property
    def is_canonical(self) -> bool:
        if self.numerator.is_zero():
            return self.pole_order == 0
        return self.pole_order == 0 or self.numerator.eval_at_one() != 0

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def canonical(self) -> RationalGF:
        return normalize(self.numerator, self.pole_order)

    @property
    def sigma(self) -> int:
        """Lowest exponent of the numerator (undefined on zero)."""
        return self._nonzero().numerator.order

    @property
    def r(self) -> int:
        """Degree of the numerator (undefined on zero)."""
        return self._nonzero().numerator.degree

    @property
    def b(self) -> int:
        """``pole_order - 1``; only meaningful when ``pole_order >= 1``."""
        if self.pole_order < 1:
            raise ValueError("b = d - 1 is only defined for pole_order >= 1")
        return self.pole_order - 1

    def h(self, n: int) -> Fraction:
        return self.numerator.coeff(n)

    def nonnegative_h(self) -> bool:
        return self.numerator.all_nonnegative()

    def _nonzero(self) -> RationalGF:
        if self.numerator.is_zero():
            raise ZeroSeriesError("undefined on the zero series")
        return self

    def __str__(self) -> str:
        return format_series(self)


ZERO_SERIES = RationalGF(ZERO, 0)


def normalize(numerator: LaurentPoly, pole_order: int) -> RationalGF:
    """Cancel factors ``1 - t`` between numerator and denominator.

    >>> str(normalize(LaurentPoly({0: 1, 2: -1}), 3))
    '(1 + t) / (1-t)^2'
    """
    if pole_order < 0:
        raise ValueError(f"pole_order must be >= 0, got {pole_order}")
    if numerator.is_zero():
        return ZERO_SERIES
    while pole_order > 0 and numerator.eval_at_one() == 0:
        numerator = numerator.divide_by_one_minus_t()
        pole_order -= 1
    return RationalGF(numerator, pole_order)


def coefficient(a: RationalGF, k: int) -> Fraction:
    """The coefficient of ``t^k`` in ``a``, by binomial convolution with the h-polynomial."""
    if a.is_zero():
        return Fraction(0)
    d = a.pole_order
    if d == 0:
        return a.numerator.coeff(k)
    b = d - 1
    total = Fraction(0)
    for i, h in a.numerator.items():
        if i > k:
            break
        total += h * binomial(b + k - i, k - i)
    return total


def expand(a: RationalGF, start: int, stop: int) -> list[Fraction]:
    """Coefficients ``[a_start, ..., a_stop]`` by repeated prefix sums.

    Dividing by ``1 - t`` is a running sum, so ``d`` passes over the dense
    numerator give the series. Independent of :func:`coefficient`.
    """
    if start > stop:
        raise ValueError(f"empty window {start}..{stop}")
    if a.is_zero() or stop < a.sigma:
        return [Fraction(0)] * (stop - start + 1)
    lo = a.sigma
    window = a.numerator.dense(lo, stop)
    for _ in range(a.pole_order):
        acc = Fraction(0)
        for idx, c in enumerate(window):
            acc += c
            window[idx] = acc
    pad = [Fraction(0)] * max(0, lo - start)
    return (pad + window[max(0, start - lo):])[: stop - start + 1]


def hvector_from_coefficients(coeffs: Sequence[Coeff], start: int, pole_order: int) -> RationalGF:
    """Recover the series from the coefficient window ``a_start, a_start+1, ...``.

    The series must vanish below ``start``. The last ``pole_order + 1``
    reconstructed h-values must be zero, otherwise the window may have cut the
    numerator short and :class:`WindowTooShort` is raised.
    """
    if pole_order < 0:
        raise ValueError(f"pole_order must be >= 0, got {pole_order}")
    d = pole_order
    weights = [(-1) ** k * math.comb(d, k) for k in range(d + 1)]
    a = [Fraction(c) for c in coeffs]
    h = []
    for n in range(len(a)):
        h.append(sum((w * a[n - k] for k, w in enumerate(weights) if k <= n), Fraction(0)))
    tail = h[-(d + 1):] if len(h) >= d + 1 else None
    if tail is None or any(tail):
        raise WindowTooShort(
            f"window of {len(a)} coefficients does not end in {d + 1} zero h-values; widen it"
        )
    return normalize(LaurentPoly.from_coeffs(h, start), d)


@dataclass(frozen=True)
class HilbertPolynomial:
    """``Phi(n) = sum(coefficients[i] * n**i)``; empty coefficients mean zero."""

    coefficients: tuple[Fraction, ...]

    def __call__(self, n: int) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * n + c
        return total

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        if not self.coefficients:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        powers = {e: c for e, c in enumerate(self.coefficients)}
        return format_poly(LaurentPoly(powers)).replace("t", "n")


def _poly_mul_dense(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def hilbert_polynomial(a: RationalGF) -> HilbertPolynomial:
    """The polynomial agreeing with the coefficients of ``a`` beyond the postulation number."""
    a = a.canonical()
    if a.is_zero() or a.pole_order == 0:
        return HilbertPolynomial(())
    b = a.pole_order - 1
    fact = math.factorial(b)
    total = [Fraction(0)] * (b + 1)
    for i, h in a.numerator.items():
        # C(b + n - i, b) = prod_{m=1..b} (n - i + m) / b!
        poly = [Fraction(1)]
        for m in range(1, b + 1):
            poly = _poly_mul_dense(poly, [Fraction(m - i), Fraction(1)])
        for idx, c in enumerate(poly):
            total[idx] += h * c / fact
    return HilbertPolynomial(tuple(total))


def postulation_number(a: RationalGF) -> int:
    """``deg h - d``: coefficients equal the Hilbert polynomial exactly beyond it."""
    a = a.canonical()
    if a.is_zero():
        raise ZeroSeriesError("postulation number of the zero series is undefined")
    return a.r - a.pole_order


def gf_add(a: RationalGF, b: RationalGF) -> RationalGF:
    d = max(a.pole_order, b.pole_order)
    num = (a.numerator * one_minus_t_power(d - a.pole_order)
           + b.numerator * one_minus_t_power(d - b.pole_order))
    return normalize(num, d)


def gf_scale(c: Coeff, a: RationalGF) -> RationalGF:
    return normalize(a.numerator.scale(c), a.pole_order)


def format_series(a: RationalGF) -> str:
    """Text form, e.g. ``(3*t^2 - 2*t^3) / (1-t)^2``.

    The numerator is parenthesized only when it has more than one term and
    there is a denominator; ``(1-t)`` carries no exponent when ``d == 1``.
    """
    num = format_poly(a.numerator)
    if a.pole_order == 0 or a.numerator.is_zero():
        return num
    if len(a.numerator.terms) > 1:
        num = f"({num})"
    den = "(1-t)" if a.pole_order == 1 else f"(1-t)^{a.pole_order}"
    return f"{num} / {den}"
