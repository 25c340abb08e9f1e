from fractions import Fraction
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from segre_series import (
    LaurentPoly,
    RationalGF,
    WindowTooShort,
    ZERO_SERIES,
    ZeroSeriesError,
    coefficient,
    expand,
    gf_add,
    gf_scale,
    hilbert_polynomial,
    hvector_from_coefficients,
    normalize,
    postulation_number,
)

from gen import lagrange_coefficients, naive_coefficients, random_series, series

G = RationalGF.of
SQUARES = G([1, 1], 3)            # (1+t)/(1-t)^3, coefficients (k+1)^2
E1 = G({2: 3, 3: -2}, 2)          # (3t^2 - 2t^3)/(1-t)^2


def test_normalize_examples():
    assert normalize(LaurentPoly({0: 1, 2: -1}), 3) == RationalGF(LaurentPoly({0: 1, 1: 1}), 2)
    assert normalize(LaurentPoly({0: 1, 1: 1}), 2) == RationalGF(LaurentPoly({0: 1, 1: 1}), 2)
    assert normalize(LaurentPoly(), 5) == ZERO_SERIES
    assert ZERO_SERIES.pole_order == 0


def test_canonical_flag():
    raw = RationalGF(LaurentPoly({0: 1, 2: -1}), 3)
    assert not raw.is_canonical
    assert raw.canonical().is_canonical
    assert not RationalGF(LaurentPoly(), 2).is_canonical


@pytest.mark.parametrize("a, k, expected", [(SQUARES, 3, 16), (G({2: 1}, 1), 5, 1),
                                            (G([1], 3), 4, 15), (E1, 1, 0), (E1, 2, 3)])
def test_coefficient(a, k, expected):
    assert naive_coefficients(a, k, k) == [expected]
    assert coefficient(a, k) == expected


def test_coefficient_below_order_and_zero():
    assert coefficient(G({2: 1}, 4), 1) == 0
    assert coefficient(ZERO_SERIES, 7) == 0


@pytest.mark.parametrize("a, lo, hi, expected", [
    (G([1], 2), 0, 4, [1, 2, 3, 4, 5]),
    (E1, 0, 4, [0, 0, 3, 4, 5]),
    (ZERO_SERIES, -2, 2, [0] * 5),
    (G({-2: 1}, 1), -3, 0, [0, 1, 1, 1]),
])
def test_expand(a, lo, hi, expected):
    assert expand(a, lo, hi) == expected


@given(series(), st.integers(-6, 4), st.integers(0, 12))
def test_expand_matches_binomial_convolution(a, lo, width):
    hi = lo + width
    direct = naive_coefficients(a, lo, hi)
    assert expand(a, lo, hi) == direct
    assert [coefficient(a, k) for k in range(lo, hi + 1)] == direct


def test_hvector_examples():
    assert hvector_from_coefficients([1, 4, 9, 16, 25, 36, 49], 0, 3) == SQUARES
    assert hvector_from_coefficients([1, 2, 3, 4, 5], 0, 2) == G([1], 2)
    with pytest.raises(WindowTooShort):
        hvector_from_coefficients([1, 4, 9], 0, 3)


def test_hvector_respects_start():
    a = G({-2: 1, 0: 5}, 2)
    window = expand(a, -2, 6)
    assert hvector_from_coefficients(window, -2, 2) == a


@settings(max_examples=200)
@given(series())
def test_round_trip(a):
    d = a.pole_order
    window = expand(a, a.sigma, a.r + d + 1)
    assert hvector_from_coefficients(window, a.sigma, d) == a


@given(series())
def test_normalize_idempotent_and_preserves_series(a):
    # multiply numerator and denominator by a spurious (1-t)^2
    raw = RationalGF(a.numerator * LaurentPoly({0: 1, 1: -2, 2: 1}), a.pole_order + 2)
    assert raw.canonical() == a
    assert a.canonical() == a
    assert expand(raw, -6, 14) == expand(a, -6, 14)


@pytest.mark.parametrize("a, coeffs", [
    (G([1], 2), [1, 1]),
    (SQUARES, [1, 2, 1]),
    (G([1, 1]), []),
    (ZERO_SERIES, []),
])
def test_hilbert_polynomial_examples(a, coeffs):
    assert list(hilbert_polynomial(a).coefficients) == coeffs


def test_hilbert_polynomial_squares_by_interpolation():
    points = [(k, Fraction((k + 1) ** 2)) for k in range(3)]
    fitted = lagrange_coefficients(points)
    phi = hilbert_polynomial(SQUARES)
    assert list(phi.coefficients) == fitted
    assert all(phi(k) == (k + 1) ** 2 for k in range(3, 7))


@settings(max_examples=150)
@given(series())
def test_hilbert_polynomial_degree_and_interpolation(a):
    phi = hilbert_polynomial(a)
    d = a.pole_order
    if d == 0:
        assert phi.is_zero()
        return
    assert phi.degree == d - 1
    assert phi.coefficients[-1] == a.numerator.eval_at_one() / math.factorial(d - 1)
    beta = postulation_number(a)
    points = [(n, coefficient(a, n)) for n in range(beta + 1, beta + 1 + d)]
    assert list(phi.coefficients) == lagrange_coefficients(points)


@pytest.mark.parametrize("a, beta", [(E1, 1), (G([1], 2), -2), (G([1, 1]), 1)])
def test_postulation_examples(a, beta):
    assert postulation_number(a) == beta


def test_postulation_rejects_zero():
    with pytest.raises(ZeroSeriesError):
        postulation_number(ZERO_SERIES)


def test_postulation_e1_contract():
    phi = hilbert_polynomial(E1)
    assert coefficient(E1, 1) == 0 and phi(1) == 2
    assert all(coefficient(E1, n) == n + 1 for n in range(2, 30))


@settings(max_examples=150)
@given(series())
def test_postulation_contract(a):
    beta = postulation_number(a)
    phi = hilbert_polynomial(a)
    assert all(coefficient(a, n) == phi(n) for n in range(beta + 1, beta + 21))
    assert coefficient(a, beta) != phi(beta)


def test_gf_add_and_scale_examples():
    assert gf_add(G([1], 1), G({1: 1}, 1)) == G([1, 1], 1)
    assert gf_scale(0, SQUARES) == ZERO_SERIES
    assert gf_add(G([1], 2), gf_scale(-1, G([1], 2))) == ZERO_SERIES


@given(series(), series(), st.fractions(-5, 5, max_denominator=4))
def test_gf_add_is_coefficientwise(a, b, c):
    s = gf_add(a, gf_scale(c, b))
    assert s.is_canonical
    assert expand(s, -5, 15) == [x + c * y for x, y in zip(expand(a, -5, 15), expand(b, -5, 15))]


def test_random_generator_is_canonical():
    rng = random.Random(0)
    for _ in range(50):
        a = random_series(rng)
        assert a.is_canonical and not a.is_zero()


def test_str():
    assert str(E1) == "(3*t^2 - 2*t^3) / (1-t)^2"
    assert str(G({5: 1}, 1)) == "t^5 / (1-t)"
    assert str(G([1, 2])) == "1 + 2*t"
    assert str(ZERO_SERIES) == "0"
