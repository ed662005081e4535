import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sytcount.exact import (
    HalfGamma,
    beta_integral,
    det_rational,
    factorial,
    falling,
    gamma_half,
    multinomial,
    stirling1_signed,
    stirling2,
)
from sytcount.polyint import MPoly, antiderivative, substitute


def surjections_over_k_factorial(n, k):
    onto = sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k)
    return onto // math.factorial(k)


def cofactor_det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


@pytest.mark.parametrize("n, expected", [(0, 1), (7, 5040), (13, 6227020800)])
def test_factorial(n, expected):
    assert factorial(n) == expected


@pytest.mark.parametrize("n, k, expected", [(5, 0, 1), (5, 3, 60), (2, 4, 0)])
def test_falling(n, k, expected):
    assert falling(n, k) == expected


def test_multinomial():
    assert multinomial(7, [4, 2, 1]) == math.factorial(7) // (24 * 2)
    assert multinomial(7, [4, 2, 1]) == 105
    assert multinomial(9, [9]) == 1
    assert multinomial(7, [2, 3, 2]) == 210
    with pytest.raises(ValueError):
        multinomial(7, [2, 2, 2])


def test_stirling2_examples():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, n) == 1 for n in range(10))
    with pytest.raises(ValueError):
        stirling2(2, 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_stirling2_matches_set_partition_count(n):
    for k in range(1, n + 1):
        assert stirling2(n, k) == surjections_over_k_factorial(n, k)


def test_stirling1_examples():
    assert stirling1_signed(3, 1) == 2
    assert stirling1_signed(3, 2) == -3
    assert all(stirling1_signed(r, r) == 1 for r in range(10))
    with pytest.raises(ValueError):
        stirling1_signed(2, 3)


@pytest.mark.parametrize("r", range(0, 9))
def test_stirling1_are_falling_factorial_coefficients(r):
    x = MPoly.var("x")
    poly = MPoly.const(1)
    for i in range(r):
        poly = poly * (x - i)
    for k in range(r + 1):
        assert stirling1_signed(r, k) == poly.coeff({"x": k})


@pytest.mark.parametrize("r", range(0, 9))
def test_stirling1_pointwise(r):
    for x in range(0, r + 1):
        assert sum(stirling1_signed(r, k) * x**k for k in range(r + 1)) == falling(x, r)


def test_gamma_half_examples():
    assert gamma_half(1) == HalfGamma(Fraction(1), 1)
    assert gamma_half(2) == HalfGamma(Fraction(1), 0)
    assert gamma_half(3) == HalfGamma(Fraction(1, 2), 1)
    with pytest.raises(ValueError):
        gamma_half(0)
    with pytest.raises(ValueError):
        gamma_half(-3)


@pytest.mark.parametrize("two_z", range(1, 40))
def test_gamma_recurrence(two_z):
    z = Fraction(two_z, 2)
    assert gamma_half(two_z + 2) == gamma_half(two_z) * z


@pytest.mark.parametrize("two_z", range(1, 30))
def test_gamma_matches_float(two_z):
    assert float(gamma_half(two_z)) == pytest.approx(math.gamma(two_z / 2), rel=1e-12)


def test_halfgamma_canonical_zero():
    assert HalfGamma(Fraction(0), 3) == HalfGamma(Fraction(0), 0)
    assert (gamma_half(1) / gamma_half(1)).is_rational


@pytest.mark.parametrize("r, s, expected", [(0, 0, Fraction(1)), (1, 1, Fraction(1, 6)), (2, 3, Fraction(1, 60))])
def test_beta_integral(r, s, expected):
    assert beta_integral(r, s) == expected


@pytest.mark.parametrize("r", range(5))
@pytest.mark.parametrize("s", range(5))
def test_beta_integral_by_antiderivative(r, s):
    x = MPoly.var("x")
    prim = antiderivative(x**r * (1 - x) ** s, "x")
    direct = substitute(prim, "x", 1) - substitute(prim, "x", 0)
    assert direct.constant_term() == beta_integral(r, s)


def test_det_examples():
    assert det_rational([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_rational([[Fraction(1, 2), Fraction(1, 6)], [1, Fraction(1, 2)]]) == Fraction(1, 12)
    assert det_rational([[1, 2], [2, 4]]) == 0
    assert det_rational([[0, 1], [1, 0]]) == -1


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(fractions, min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_matches_cofactor_expansion(m):
    assert det_rational(m) == cofactor_det(m)
