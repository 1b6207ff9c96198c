import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_v
from narayana_brocard.padic import INFINITY, floor_log, vp, vp_factorial, vp_factorial_bounds


def legendre_oracle(m, p):
    """v_p(m!) as the sum of v_p(k) over the factors."""
    return sum(brute_v(k, p) for k in range(1, m + 1))


@pytest.mark.parametrize("x, p, expected", [(0, 3, INFINITY), (2745, 3, 2), (-27, 3, 3), (1, 5, 0), (2**70, 2, 70)])
def test_vp_values(x, p, expected):
    assert vp(x, p) == expected


@pytest.mark.parametrize("p", [0, 1, 4, 9, -3])
def test_vp_rejects_non_primes(p):
    with pytest.raises(ValueError):
        vp(10, p)


@given(st.integers(-(10**40), 10**40), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_vp_matches_division(x, p):
    expected = brute_v(x, p)
    assert vp(x, p) == (INFINITY if expected is None else expected)


@given(st.integers(0, 60), st.integers(1, 10**6).filter(lambda u: u % 3), st.sampled_from([3, 5]))
def test_vp_of_prime_powers(e, unit, p):
    if unit % p == 0:
        return
    assert vp(unit * p**e, p) == e


@given(st.integers(-(10**12), 10**12), st.integers(-(10**12), 10**12), st.sampled_from([2, 3, 5, 7]))
def test_vp_multiplicative(x, y, p):
    assert vp(x * y, p) == vp(x, p) + vp(y, p)


@pytest.mark.parametrize("m, p, expected", [(10, 3, 4), (0, 3, 0), (221, 3, 107), (100, 5, 24)])
def test_vp_factorial_values(m, p, expected):
    assert vp_factorial(m, p) == expected
    assert legendre_oracle(m, p) == expected


def test_ten_factorial_directly():
    assert math.factorial(10) == 3628800 == 3**4 * 44800


@pytest.mark.parametrize(
    "m, p, lower, upper",
    [(1, 2, Fraction(0), Fraction(0)), (10, 3, Fraction(2), Fraction(9, 2)), (221, 3, Fraction(211, 2), Fraction(110))],
)
def test_vp_factorial_bounds_values(m, p, lower, upper):
    assert vp_factorial_bounds(m, p) == (lower, upper)
    assert lower <= vp_factorial(m, p) <= upper


def test_vp_factorial_bounds_rejects_zero():
    with pytest.raises(ValueError):
        vp_factorial_bounds(0, 3)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_floor_log_at_power_boundaries(p):
    for j in range(1, 30):
        assert floor_log(p**j, p) == j
        assert floor_log(p**j - 1, p) == j - 1
        assert floor_log(p**j + 1, p) == j


@given(st.integers(1, 10**4), st.sampled_from([2, 3, 5, 7]))
def test_sandwich_property(m, p):
    lower, upper = vp_factorial_bounds(m, p)
    assert lower <= vp_factorial(m, p) <= upper


def test_legendre_against_factorial_product():
    f = 1
    for m in range(1, 400):
        f *= m
        for p in (2, 3, 5, 7):
            assert vp_factorial(m, p) == vp(f, p)
