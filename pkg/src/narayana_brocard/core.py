"""Exact, modular and fast evaluation of the Narayana sequence.

    a_0 = 0, a_1 = a_2 = 1,  a_n = a_{n-1} + a_{n-3}

The fast path rests on the addition identity

    a_{m+n} = a_{m-1} a_{n+2} + a_{m-3} a_{n+1} + a_{m-2} a_n      (m >= 3, n >= 0)

applied to windows (a_k, a_{k+1}, a_{k+2}), which gives index doubling.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

# Below this index plain iteration beats the doubling identity.
FAST_THRESHOLD = 32

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class NarayanaWindow:
    """Three consecutive terms (a_k, a_{k+1}, a_{k+2})."""

    index: int
    values: Triple

    def advance(self, steps: int = 1) -> "NarayanaWindow":
        x, y, z = self.values
        for _ in range(steps):
            x, y, z = y, z, z + x
        return NarayanaWindow(self.index + steps, (x, y, z))

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")


def _iterate(n: int, modulus: Optional[int] = None) -> Triple:
    x, y, z = 0, 1, 1
    if modulus is None:
        for _ in range(n):
            x, y, z = y, z, z + x
    else:
        x, y, z = x % modulus, y % modulus, z % modulus
        for _ in range(n):
            x, y, z = y, z, (z + x) % modulus
    return x, y, z


def narayana(n: int) -> int:
    """a_n by straight iteration of the recurrence."""
    _check_index(n)
    return _iterate(n)[0]


def narayana_window(n: int) -> NarayanaWindow:
    _check_index(n)
    return NarayanaWindow(n, _iterate(n))


def _combine(p: Triple, q: Triple, modulus: Optional[int]) -> Triple:
    """Window at index i+j from windows at i and j.

    The addition identity with m = i + 3 yields a_{i+j+3..i+j+5}; three
    backward steps a_{k-3} = a_k - a_{k-1} return to index i + j.
    """
    p0, p1, p2 = p
    q0, q1, q2 = q
    q3 = q2 + q0
    q4 = q3 + q1
    s3 = p2 * q2 + p0 * q1 + p1 * q0
    s4 = p2 * q3 + p0 * q2 + p1 * q1
    s5 = p2 * q4 + p0 * q3 + p1 * q2
    r2 = s5 - s4
    r1 = s4 - s3
    r0 = s3 - r2
    if modulus is not None:
        return r0 % modulus, r1 % modulus, r2 % modulus
    return r0, r1, r2


def _fast_window(n: int, modulus: Optional[int] = None) -> Triple:
    if n < FAST_THRESHOLD:
        return _iterate(n, modulus)
    # top bits seed the doubling loop by iteration
    shift = n.bit_length()
    while (n >> shift) < FAST_THRESHOLD // 2:
        shift -= 1
    w = _iterate(n >> shift, modulus)
    for bit in range(shift - 1, -1, -1):
        w = _combine(w, w, modulus)
        if (n >> bit) & 1:
            x, y, z = w
            w = (y, z, z + x if modulus is None else (z + x) % modulus)
    return w


def narayana_fast(n: int) -> int:
    """a_n via index doubling; same value as :func:`narayana`."""
    _check_index(n)
    return _fast_window(n)[0]


def narayana_window_fast(n: int) -> NarayanaWindow:
    _check_index(n)
    return NarayanaWindow(n, _fast_window(n))


def narayana_mod(n: int, m: int) -> int:
    """a_n mod m for m >= 2."""
    _check_index(n)
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return _fast_window(n, m)[0]


def narayana_window_mod(n: int, m: int) -> Triple:
    _check_index(n)
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return _fast_window(n, m)


def iter_mod(start: int, stop: int, m: int) -> Iterator[Tuple[int, int]]:
    """Yield (i, a_i mod m) for start <= i < stop."""
    x, y, z = narayana_window_mod(start, m)
    for i in range(start, stop):
        yield i, x
        x, y, z = y, z, (z + x) % m


# ---------------------------------------------------------------------------
# growth rate: the real root of x^3 - x^2 - 1
# ---------------------------------------------------------------------------


def _charpoly(x: Fraction) -> Fraction:
    return x * x * x - x * x - 1


@dataclass(frozen=True)
class AlphaInterval:
    lower: Fraction
    upper: Fraction
    precision_bits: int

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, other: "AlphaInterval") -> bool:
        return self.lower <= other.lower and other.upper <= self.upper


def alpha(precision_bits: int) -> AlphaInterval:
    """Bracket the real root of x^3 - x^2 - 1 to width 2**-precision_bits.

    Sign bisection from [1, 2] in exact rationals.
    """
    if precision_bits < 8:
        raise ValueError("precision_bits must be >= 8")
    lo, hi = Fraction(1), Fraction(2)
    for _ in range(precision_bits):
        mid = (lo + hi) / 2
        if _charpoly(mid) < 0:
            lo = mid
        else:
            hi = mid
    return AlphaInterval(lo, hi, precision_bits)


@dataclass(frozen=True)
class GrowthViolation:
    n: int
    side: str  # "lower" or "upper"


class _Powers:
    """Powers of a dyadic rational num / 2**shift, advanced one exponent at a time."""

    def __init__(self, q: Fraction) -> None:
        self.num = q.numerator
        self.shift = q.denominator.bit_length() - 1
        self.exp = 0
        self.value = 1

    def cmp(self, e: int, target: int) -> int:
        """Sign of q**e - target."""
        if e < 0:
            q = Fraction(self.num, 1 << self.shift) ** e
            return (q > target) - (q < target)
        if e < self.exp:
            self.exp, self.value = e, self.num**e
        while self.exp < e:
            self.value *= self.num
            self.exp += 1
        rhs = target << (self.shift * e)
        return (self.value > rhs) - (self.value < rhs)


def _growth_verdict(
    n: int, a_n: int, lower: Tuple[_Powers, _Powers], upper: Tuple[_Powers, _Powers]
) -> Tuple[Optional[bool], Optional[bool]]:
    """(lower_ok, upper_ok) for alpha^(n-3) <= a_n <= alpha^(n-1); None if undecided.

    ``lower``/``upper`` hold power trackers for the bracket endpoints, one
    per side so each advances monotonically.
    """
    e = n - 3
    if e == 0:
        lower_ok: Optional[bool] = a_n >= 1
    else:
        small, big = (lower[0], upper[0]) if e > 0 else (upper[0], lower[0])
        if big.cmp(e, a_n) <= 0:
            lower_ok = True
        elif small.cmp(e, a_n) > 0:
            lower_ok = False
        else:
            lower_ok = None
    e = n - 1
    if e == 0:
        upper_ok: Optional[bool] = a_n <= 1
    else:
        small, big = lower[1], upper[1]
        if small.cmp(e, a_n) >= 0:
            upper_ok = True
        elif big.cmp(e, a_n) < 0:
            upper_ok = False
        else:
            upper_ok = None
    return lower_ok, upper_ok


def check_growth_bounds(n_max: int, start_bits: int = 64, max_bits: int = 1 << 14) -> List[GrowthViolation]:
    """Certify alpha^(n-3) <= a_n <= alpha^(n-1) for 1 <= n <= n_max.

    Each side is decided with the bracketing interval; an undecided side
    doubles the precision. Returns the list of certified violations.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    violations: List[GrowthViolation] = []
    iv = alpha(start_bits)
    lo = (_Powers(iv.lower), _Powers(iv.lower))
    hi = (_Powers(iv.upper), _Powers(iv.upper))
    x, y, z = 1, 1, 1  # window at n = 1
    for n in range(1, n_max + 1):
        while True:
            lower_ok, upper_ok = _growth_verdict(n, x, lo, hi)
            if lower_ok is not None and upper_ok is not None:
                break
            if iv.precision_bits >= max_bits:
                raise RuntimeError(f"growth bound at n={n} undecided at {max_bits} bits")
            iv = alpha(iv.precision_bits * 2)
            lo = (_Powers(iv.lower), _Powers(iv.lower))
            hi = (_Powers(iv.upper), _Powers(iv.upper))
        if not lower_ok:
            violations.append(GrowthViolation(n, "lower"))
        if not upper_ok:
            violations.append(GrowthViolation(n, "upper"))
        x, y, z = y, z, z + x
    return violations
