"""p-adic valuations of integers and factorials.

Valuations are plain ints, with ``INFINITY`` (``math.inf``) standing for
v_p(0). Arithmetic and comparisons then behave as in N u {inf}.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Tuple, Union

INFINITY = math.inf

Valuation = Union[int, float]


def _check_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"{p} is not a prime")


def vp(x: int, p: int) -> Valuation:
    """Largest e with p**e | x; INFINITY for x = 0."""
    _check_prime(p)
    if x == 0:
        return INFINITY
    x = abs(x)
    if p == 2:
        return (x & -x).bit_length() - 1
    # divide by p, p^2, p^4, ... while possible, then walk back down
    powers = [p]
    while x % powers[-1] == 0:
        x //= powers[-1]
        powers.append(powers[-1] * powers[-1])
    e = (1 << (len(powers) - 1)) - 1
    for k in range(len(powers) - 2, -1, -1):
        if x % powers[k] == 0:
            x //= powers[k]
            e += 1 << k
    return e


def floor_log(m: int, p: int) -> int:
    """Largest j with p**j <= m, in integer arithmetic."""
    if m < 1:
        raise ValueError("m must be >= 1")
    j, q = 0, p
    while q <= m:
        q *= p
        j += 1
    return j


def vp_factorial(m: int, p: int) -> int:
    """v_p(m!) by Legendre's sum of floor(m / p**j)."""
    _check_prime(p)
    if m < 0:
        raise ValueError("m must be non-negative")
    total, q = 0, p
    while q <= m:
        total += m // q
        q *= p
    return total


def vp_factorial_bounds(m: int, p: int) -> Tuple[Fraction, Fraction]:
    """Exact (lower, upper) with lower <= v_p(m!) <= upper.

    lower = m/(p-1) - floor(log_p m) - 1,  upper = (m-1)/(p-1).
    """
    _check_prime(p)
    if m < 1:
        raise ValueError("m must be >= 1")
    lower = Fraction(m, p - 1) - floor_log(m, p) - 1
    upper = Fraction(m - 1, p - 1)
    return lower, upper
