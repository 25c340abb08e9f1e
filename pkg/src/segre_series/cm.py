"""Regularity of Segre products of Cohen-Macaulay modules from Hilbert data.

Cohen-Macaulayness is never inferred; a module carries a ``cm_declared``
flag and every theorem-level operation refuses modules without it. For a
Cohen-Macaulay module the regularity is read off as the degree of the
canonical h-polynomial, and ``alpha = dim - reg``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisViolation, VerificationError, ZeroSeriesError
from .segre import (
    condition_star_star,
    segre_closed,
    segre_fold,
    segre_multi_hvector,
)
from .series import (
    ZERO_SERIES,
    RationalGF,
    coefficient,
    expand,
    hvector_from_coefficients,
    postulation_number,
)


@dataclass(frozen=True)
class GradedCMModule:
    """Hilbert data of a graded module declared Cohen-Macaulay.

    ``hilbert`` is stored canonically and ``dim`` must equal its pole order.
    Nonnegative grading (``sigma >= 0``) is checked by the operations that
    need it, since the zero-dimensional case allows any grading.
    """

    hilbert: RationalGF
    dim: int | None = None
    cm_declared: bool = True

    def __post_init__(self):
        h = self.hilbert.canonical()
        if h.is_zero():
            raise ZeroSeriesError("module Hilbert series must be nonzero")
        object.__setattr__(self, "hilbert", h)
        if self.dim is None:
            object.__setattr__(self, "dim", h.pole_order)
        elif self.dim != h.pole_order:
            raise ValueError(
                f"dim {self.dim} does not match the canonical pole order {h.pole_order}")

    @property
    def reg(self) -> int:
        return self.hilbert.r

    @property
    def alpha(self) -> int:
        return self.dim - self.reg

    @property
    def sigma(self) -> int:
        return self.hilbert.sigma


def _require_cm(m: GradedCMModule, index: int | None = None) -> None:
    if not m.cm_declared:
        raise HypothesisViolation("module is not declared Cohen-Macaulay", index=index)


def regularity(m: GradedCMModule) -> int:
    """Castelnuovo-Mumford regularity of a Cohen-Macaulay module: ``deg h``."""
    _require_cm(m)
    return m.reg


def veronese_window(a: RationalGF, n: int) -> int:
    """Number of Veronese coefficients that certify the reconstruction."""
    beta = postulation_number(a)
    return max(beta, 0) // n + 2 * a.pole_order + 2


def veronese(a: RationalGF, n: int) -> RationalGF:
    """The series ``sum_{l >= 0} a_{nl} t^l``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"Veronese degree must be an integer >= 1, got {n!r}")
    a = a.canonical()
    if a.is_zero():
        return ZERO_SERIES
    if a.sigma < 0:
        raise HypothesisViolation("Veronese transform needs sigma >= 0")
    if n == 1:
        return a
    count = veronese_window(a, n)
    coeffs = expand(a, 0, n * (count - 1))[::n]
    return hvector_from_coefficients(coeffs, 0, a.pole_order)


def _require_admissible_module(m: GradedCMModule, index: int | None = None) -> None:
    _require_cm(m, index)
    if m.dim < 1:
        raise HypothesisViolation("module must have positive dimension", index=index)
    if m.sigma < 0:
        raise HypothesisViolation("module must be graded in nonnegative degrees", index=index)
    if m.reg >= m.dim:
        raise HypothesisViolation(
            f"reg = {m.reg} is not below dim = {m.dim}", index=index)
    if not m.hilbert.nonnegative_h():
        raise HypothesisViolation(
            "negative h-coefficient: the module cannot be Cohen-Macaulay", index=index)


def veronese_regularity_check(m: GradedCMModule, n: int) -> int:
    """``d - ceil(alpha / n)``, checked against the Veronese h-polynomial."""
    _require_admissible_module(m)
    if m.sigma != 0:
        raise HypothesisViolation("Veronese regularity formula needs sigma = 0")
    value = m.dim - math.ceil(m.alpha / n)
    actual = veronese(m.hilbert, n).r
    if actual != value:
        raise VerificationError("Veronese regularity", value, actual)
    return value


def _chained_star_star(series: Sequence[RationalGF]) -> bool:
    acc = series[0]
    for x in series[1:]:
        if not condition_star_star(acc, x):
            return False
        acc = segre_closed(acc, x)
    return True


def _product_hvector(series: Sequence[RationalGF]) -> RationalGF:
    if len(series) == 1:
        return series[0]
    return segre_multi_hvector(series)


def segre_regularity_cm(modules: Sequence[GradedCMModule], verify: bool = False) -> int:
    """``(b_1 + ... + b_s + 1) - max alpha_i`` for CM modules with ``reg < dim``.

    With ``verify`` the product h-polynomial is computed by the s-fold sum and
    its degree, together with the chained (**) condition, must agree.
    """
    return segre_veronese_regularity(modules, [1] * len(modules), verify=verify)


def segre_veronese_regularity(modules: Sequence[GradedCMModule], ns: Sequence[int],
                              verify: bool = False) -> int:
    """``(b_1 + ... + b_s + 1) - max ceil(alpha_i / n_i)`` after per-factor Veronese."""
    if not modules:
        raise HypothesisViolation("need at least one module")
    if len(ns) != len(modules):
        raise ValueError(f"{len(modules)} modules but {len(ns)} Veronese degrees")
    for k, (m, n) in enumerate(zip(modules, ns)):
        _require_admissible_module(m, k)
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise HypothesisViolation(f"Veronese degree {n!r} must be >= 1", index=k)
    value = (sum(m.dim - 1 for m in modules) + 1
             - max(math.ceil(m.alpha / n) for m, n in zip(modules, ns)))
    if verify:
        series = [veronese(m.hilbert, n) for m, n in zip(modules, ns)]
        product = _product_hvector(series)
        if product.r != value:
            raise VerificationError("regularity of the Segre product", value, product.r)
        if not _chained_star_star(series):
            raise VerificationError("chained (**) for admissible modules", True, False)
    return value


@dataclass(frozen=True)
class ZeroDimReport:
    """Regularity formula for a family containing a zero-dimensional module.

    ``attained`` is False when the product's top coefficient cancels or the
    product vanishes; the formula value is reported either way.
    """

    value: int
    product: RationalGF
    attained: bool


def zero_dim_segre_report(modules: Sequence[GradedCMModule]) -> ZeroDimReport:
    for k, m in enumerate(modules):
        _require_cm(m, k)
    zero_dim = [m.reg for m in modules if m.dim == 0]
    if not zero_dim:
        raise HypothesisViolation("no zero-dimensional module in the family")
    value = min(zero_dim)
    product = segre_fold([m.hilbert for m in modules], "closed")
    if product.pole_order != 0:
        raise VerificationError("product with a finite-length factor has a pole",
                                0, product.pole_order)
    if not product.is_zero() and product.r > value:
        raise VerificationError("degree of the finite-length product", value, product.r)
    return ZeroDimReport(value, product, not product.is_zero() and product.r == value)


def zero_dim_segre_regularity(modules: Sequence[GradedCMModule], verify: bool = False) -> int:
    """``min reg(M_k)`` over the zero-dimensional members of the family."""
    if verify:
        return zero_dim_segre_report(modules).value
    for k, m in enumerate(modules):
        _require_cm(m, k)
    zero_dim = [m.reg for m in modules if m.dim == 0]
    if not zero_dim:
        raise HypothesisViolation("no zero-dimensional module in the family")
    return min(zero_dim)


@dataclass(frozen=True)
class NewcombQuery:
    b: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        if not self.b or any(isinstance(x, bool) or not isinstance(x, int) or x < 0
                             for x in self.b):
            raise ValueError(f"b must be a nonempty list of nonnegative integers, got {self.b}")

    @property
    def max_k(self) -> int:
        return sum(self.b) - max(self.b)


def newcomb(q: NewcombQuery) -> int:
    """Simon Newcomb number ``A([b], k)``: h-coefficient of a Segre product of polynomial rings.

    >>> [newcomb(NewcombQuery((1, 1, 1), k)) for k in range(3)]
    [1, 4, 1]
    """
    b, k = q.b, q.k
    if not 0 <= k <= q.max_k:
        return 0
    n = len(b)
    if n == 1:
        return 1
    prefix = [sum(b[: s + 1]) for s in range(n)]
    # caps[s] bounds i_{s+1} (1-based), s = 1..n-1
    caps = {s: prefix[s] - max(b[: s + 1]) for s in range(1, n)}

    def link(s: int, i: int, nxt: int) -> int:
        # A_{i_s, i_{s+1}} with 1-based s = s + 1
        return (math.comb(prefix[s] - i, nxt - i) if nxt >= i else 0) * math.comb(b[s + 1] + i, nxt)

    def inner(s: int, nxt: int) -> int:
        # sum over i_{s+1} (1-based) given i_{s+2} = nxt
        total = 0
        for i in range(0, min(caps[s], nxt) + 1):
            w = link(s, i, nxt)
            if not w:
                continue
            if s == 1:
                total += w * math.comb(b[0], i) * math.comb(b[1], i)
            else:
                total += w * inner(s - 1, i)
        return total

    if n == 2:
        return math.comb(b[0], k) * math.comb(b[1], k)
    return inner(n - 2, k)


def newcomb_row(b: Sequence[int]) -> list[int]:
    q = NewcombQuery(tuple(b), 0)
    return [newcomb(NewcombQuery(q.b, k)) for k in range(q.max_k + 1)]


def polynomial_ring_series(b: int) -> RationalGF:
    """Hilbert series ``1 / (1 - t)^(b + 1)`` of a polynomial ring in ``b + 1`` variables."""
    return RationalGF.of([1], b + 1)


def newcomb_oracle_row(b: Sequence[int]) -> list[int]:
    """The Newcomb row from expanding the Segre product of polynomial rings."""
    if len(b) == 1:
        return [1]
    prod = segre_fold([polynomial_ring_series(x) for x in b], "oracle")
    row = prod.numerator.dense(0, prod.r)
    return [int(c) for c in row]


def coefficient_check(a: RationalGF, v: RationalGF, n: int, length: int) -> bool:
    """``v_l == a_{nl}`` for ``l < length``, via the binomial convolution."""
    return all(coefficient(v, l) == coefficient(a, n * l) for l in range(length))
