"""Exact Laurent polynomials in one variable ``t`` with rational coefficients.

A :class:`LaurentPoly` is stored sparsely as ``{exponent: Fraction}`` with no
zero entries. Instances are immutable and hashable.

>>> p = LaurentPoly({0: 1, 1: -1})
>>> q = LaurentPoly.from_coeffs([1, 1, 1])
>>> p * q
LaurentPoly('1 - t^3')
>>> (p * q).divide_by_one_minus_t() == q
True
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import NotDivisible, ZeroPolynomialError

Coeff = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient ``n(n-1)...(n-k+1)/k!`` for integer ``n``.

    Defined for every integer ``n``; ``k < 0`` gives 0 and ``k = 0`` gives 1.

    >>> binomial(5, 2), binomial(2, 5), binomial(-3, 2)
    (10, 0, 6)
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # upper negation: C(n, k) = (-1)^k C(k - n - 1, k)
    c = math.comb(k - n - 1, k)
    return -c if k & 1 else c


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an int or Fraction, got {c!r}")
    return Fraction(c)


class LaurentPoly:
    """Finite-support Laurent polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if isinstance(e, bool) or not isinstance(e, int):
                    raise TypeError(f"exponent must be an int, got {e!r}")
                c = _as_fraction(c)
                if c:
                    clean[e] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Coeff], start: int = 0) -> LaurentPoly:
        """Build ``sum(coeffs[i] * t**(start + i))``."""
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent: int, coeff: Coeff = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> LaurentPoly:
        # trusted constructor: terms already Fractions, zero-free
        p = object.__new__(cls)
        p._terms = dict(sorted(terms.items()))
        p._hash = None
        return p

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Nonzero ``(exponent, coefficient)`` pairs in ascending exponent order."""
        return iter(self._terms.items())

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")
        return next(reversed(self._terms))

    @property
    def order(self) -> int:
        """Least exponent with a nonzero coefficient."""
        if not self._terms:
            raise ZeroPolynomialError("order of the zero polynomial is undefined")
        return next(iter(self._terms))

    def dense(self, lo: int, hi: int) -> list[Fraction]:
        """Coefficients of ``t^lo .. t^hi`` as a list (zeros included)."""
        return [self._terms.get(k, Fraction(0)) for k in range(lo, hi + 1)]

    def eval_at_one(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def all_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def shift(self, m: int) -> LaurentPoly:
        """Multiply by ``t^m``."""
        return LaurentPoly._raw({e + m: c for e, c in self._terms.items()})

    def scale(self, c: Coeff) -> LaurentPoly:
        c = _as_fraction(c)
        if not c:
            return ZERO
        return LaurentPoly._raw({e: c * v for e, v in self._terms.items()})

    def divide_by_one_minus_t(self) -> LaurentPoly:
        """Return ``q`` with ``(1 - t) * q == self``.

        Raises :class:`NotDivisible` when ``self(1) != 0``.
        """
        if not self._terms:
            return ZERO
        if self.eval_at_one():
            raise NotDivisible(f"{self} is not divisible by (1 - t)")
        # q_k = sum_{e <= k} p_e, running from the lowest exponent
        out: dict[int, Fraction] = {}
        acc = Fraction(0)
        for k in range(self.order, self.degree):
            acc += self._terms.get(k, 0)
            if acc:
                out[k] = acc
        return LaurentPoly._raw(out)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            out: dict[int, Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
            return LaurentPoly._raw({e: c for e, c in out.items() if c})
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_scale(c: Coeff, p: LaurentPoly) -> LaurentPoly:
    return p.scale(c)


def poly_shift(p: LaurentPoly, m: int) -> LaurentPoly:
    return p.shift(m)


def eval_at_one(p: LaurentPoly) -> Fraction:
    return p.eval_at_one()


def divide_by_one_minus_t(p: LaurentPoly) -> LaurentPoly:
    return p.divide_by_one_minus_t()


def one_minus_t_power(d: int) -> LaurentPoly:
    """``(1 - t)^d`` expanded, for ``d >= 0``."""
    return LaurentPoly({k: (-1) ** k * math.comb(d, k) for k in range(d + 1)})


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(e: int) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return "t"
    return f"t^{e}"


def format_poly(p: LaurentPoly) -> str:
    """Render ``p`` in ascending exponent order, e.g. ``3*t^2 - 2*t^3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, c in p.items():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = format_coefficient(mag)
        elif mag == 1:
            body = _format_monomial(e)
        else:
            body = f"{format_coefficient(mag)}*{_format_monomial(e)}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def sum_polys(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ZERO
    for p in polys:
        out = out + p
    return out
