"""Explicit bounds on m and n for m! + 1 = a_n^2, evaluated with certified intervals.

The chain combines the Legendre lower bound for v3(m!) with the valuation
laws, giving an integer left-hand side

    L(m) = floor((m/2 - floor(log_3 m) - 17) / 9),

and the growth bound a_n >= alpha^(n-3), giving n < 4 + 1.33 m ln(m/2).
How the two are joined decides the crossover, so three readings are kept:

``printed``  L(m) <= (34 + 1.33 ln(m/2)) / ln 3, as typeset
``stated``   L(m) <= (34 + 1.33 m ln(m/2)) / ln 3, with the factor m restored
``sound``    3^L(m) < 34 + 1.33 m ln(m/2), i.e. L(m) <= log_3(n + 30)

Real logarithms go through mpmath interval arithmetic; a comparison that
the interval cannot decide is retried at doubled precision.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from mpmath import iv
from mpmath.libmp import to_rational

from narayana_brocard.padic import floor_log

PUBLISHED_M_MAX = 221
PUBLISHED_N_MAX = 1386
READINGS = ("sound", "printed", "stated")
# deviation from the published m bound that is reported but tolerated
M_TOLERANCE = 2

_COEF = Fraction(133, 100)


def lhs(m: int) -> int:
    """floor((m/2 - floor(log_3 m) - 17) / 9), exactly."""
    return math.floor((Fraction(m, 2) - floor_log(m, 3) - 17) / 9)


@contextmanager
def _precision(bits: int) -> Iterator[None]:
    saved = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = saved


def _ivq(q: Fraction):
    return iv.mpf(q.numerator) / q.denominator


def _endpoints(x) -> Tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    return Fraction(*map(int, to_rational(lo))), Fraction(*map(int, to_rational(hi)))


def _rhs_interval(reading: str, m: int):
    log_half = iv.log(iv.mpf(m) / 2)
    if reading == "printed":
        return (34 + _ivq(_COEF) * log_half) / iv.log(3)
    if reading == "stated":
        return (34 + _ivq(_COEF) * m * log_half) / iv.log(3)
    if reading == "sound":
        return 34 + _ivq(_COEF) * m * log_half
    raise ValueError(f"unknown reading {reading!r}")


def _decide(reading: str, m: int, prec: int) -> Tuple[bool, Tuple[Fraction, Fraction], int]:
    """(holds, rhs interval, precision used) for the inequality at m."""
    left = lhs(m)
    while True:
        with _precision(prec):
            lo, hi = _endpoints(_rhs_interval(reading, m))
        if reading == "sound":
            target = Fraction(3) ** left
            if target < lo:
                return True, (lo, hi), prec
            if target >= hi:
                return False, (lo, hi), prec
        else:
            if left <= lo:
                return True, (lo, hi), prec
            if left > hi:
                return False, (lo, hi), prec
        prec *= 2
        if prec > 1 << 14:
            raise RuntimeError(f"undecided inequality at m={m}")


def n_bound(m: int, prec: int = 64) -> int:
    """Largest integer n with n < 4 + 1.33 m ln(m/2), certified."""
    while True:
        with _precision(prec):
            lo, hi = _endpoints(4 + _ivq(_COEF) * m * iv.log(iv.mpf(m) / 2))
        if math.ceil(lo) == math.ceil(hi) and lo != math.ceil(lo):
            return math.ceil(lo) - 1
        prec *= 2


@dataclass(frozen=True)
class TraceRow:
    m: int
    lhs: int
    rhs: Tuple[Fraction, Fraction]
    holds: bool


@dataclass
class BoundResult:
    reading: str
    m_max: Optional[int]
    n_max: Optional[int]
    first_failure: Optional[int]
    scan_limit: int
    trace: List[TraceRow] = field(default_factory=list)
    initial_segment: bool = True  # every m <= m_max satisfies the inequality

    @property
    def m_deviation(self) -> Optional[int]:
        return None if self.m_max is None else self.m_max - PUBLISHED_M_MAX

    @property
    def n_deviation(self) -> Optional[int]:
        return None if self.n_max is None else self.n_max - PUBLISHED_N_MAX

    @property
    def matches_published(self) -> bool:
        return self.m_max == PUBLISHED_M_MAX and self.n_max == PUBLISHED_N_MAX

    @property
    def within_tolerance(self) -> bool:
        return self.m_deviation is not None and abs(self.m_deviation) <= M_TOLERANCE


def derive_bounds(reading: str = "sound", scan_limit: int = 1500, prec: int = 64) -> BoundResult:
    """Largest m in [1, scan_limit] satisfying the inequality, and its n bound.

    ``m_max`` is None when no m in range violates the inequality (no finite
    bound at this scan limit).
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    holds: List[bool] = [_decide(reading, m, prec)[0] for m in range(1, scan_limit + 1)]
    failing = [m for m, ok in enumerate(holds, start=1) if not ok]
    if not failing:
        return BoundResult(reading, None, None, None, scan_limit, _trace(reading, scan_limit - 2, scan_limit, prec))
    satisfied = [m for m, ok in enumerate(holds, start=1) if ok]
    m_max = max(satisfied) if satisfied else 0
    first = failing[0]
    result = BoundResult(
        reading,
        m_max,
        n_bound(m_max, prec) if m_max >= 3 else None,
        first,
        scan_limit,
        _trace(reading, max(1, m_max - 2), m_max + 2, prec),
        initial_segment=first == m_max + 1,
    )
    return result


def _trace(reading: str, lo: int, hi: int, prec: int) -> List[TraceRow]:
    rows = []
    for m in range(lo, hi + 1):
        ok, rhs, _ = _decide(reading, m, prec)
        rows.append(TraceRow(m, lhs(m), rhs, ok))
    return rows


def all_readings(scan_limit: int = 1500) -> List[BoundResult]:
    return [derive_bounds(r, scan_limit) for r in READINGS]
