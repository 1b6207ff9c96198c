"""Brocard-Ramanujan search m! + 1 = u^2, with u a Narayana number or arbitrary."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from narayana_brocard.core import narayana_fast, narayana_window_fast
from narayana_brocard.laws import Target, get_law, law_eval
from narayana_brocard.padic import Valuation, vp, vp_factorial


def combined_v3_upper(n: int) -> Valuation:
    """v3(a_n^2 - 1) as predicted by the corrected a-1 and a+1 laws."""
    if n < 4:
        raise ValueError("n must be >= 4 (a_n is 0 or 1 below that)")
    return law_eval(get_law(Target.A_MINUS_1), n) + law_eval(get_law(Target.A_PLUS_1), n)


class FactorialCursor:
    """Running (m, m!) that only moves forward.

    Queries must arrive in non-decreasing order; each factorial step costs
    one multiplication over the whole scan.
    """

    def __init__(self) -> None:
        self.m = 0
        self.factorial = 1
        self.steps = 0
        self._last: Optional[int] = None

    def advance(self) -> None:
        self.m += 1
        self.factorial *= self.m
        self.steps += 1

    def query(self, x: int) -> Optional[int]:
        if self._last is not None and x < self._last:
            raise ValueError(f"out-of-order query: {x} after {self._last}")
        self._last = x
        while self.factorial < x:
            self.advance()
        return self.m if self.factorial == x else None


def is_factorial(x: int, cursor: FactorialCursor) -> Optional[int]:
    return cursor.query(x)


@dataclass
class SearchOutcome:
    kind: str
    scanned: Tuple[int, int]
    solutions: List[Tuple[int, int]] = field(default_factory=list)
    stats: Dict[str, int] = field(default_factory=dict)
    # multiplications spent by factorial cursors; depends on chunking
    factorial_steps: int = 0

    def verify(self) -> bool:
        return all(math.factorial(m) + 1 == u * u for m, u in self.solutions)


def _scan_narayana(lo: int, hi: int) -> Tuple[List[Tuple[int, int]], Dict[str, int], int]:
    cursor = FactorialCursor()
    x, y, z = narayana_window_fast(lo).values
    solutions = []
    # bracketed: m! < t < (m+1)! for some m, so t is no factorial
    stats = {"candidates": 0, "bracketed": 0, "exact": 0}
    for _ in range(lo, hi + 1):
        t = x * x - 1
        stats["candidates"] += 1
        m = cursor.query(t)
        if m is None:
            stats["bracketed"] += 1
        else:
            stats["exact"] += 1
            solutions.append((m, x))
        x, y, z = y, z, z + x
    return solutions, stats, cursor.steps


def search_narayana(n_max: int, jobs: int = 1, n_min: int = 4) -> SearchOutcome:
    """All n in [n_min, n_max] with a_n^2 - 1 a factorial.

    n <= 3 gives a_n in {0, 1}, so m! would be -1 or 0; the scan starts at 4.
    """
    if n_max < 4 or n_min < 4 or n_min > n_max:
        raise ValueError("need 4 <= n_min <= n_max")
    outcome = SearchOutcome("narayana", (n_min, n_max))
    if jobs <= 1:
        parts = [_scan_narayana(n_min, n_max)]
    else:
        size = -(-(n_max - n_min + 1) // jobs)
        bounds = [(a, min(a + size - 1, n_max)) for a in range(n_min, n_max + 1, size)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_scan_narayana, [a for a, _ in bounds], [b for _, b in bounds]))
    for sols, stats, steps in parts:
        outcome.solutions.extend(sols)
        for k, v in stats.items():
            outcome.stats[k] = outcome.stats.get(k, 0) + v
        outcome.factorial_steps += steps
    if not outcome.verify():
        raise AssertionError("search returned a non-solution")
    return outcome


def search_general(m_max: int) -> SearchOutcome:
    """All (m, u) with m! + 1 = u^2 and 1 <= m <= m_max."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    outcome = SearchOutcome("general", (1, m_max))
    f = 1
    non_square = 0
    for m in range(1, m_max + 1):
        f *= m
        outcome.factorial_steps += 1
        u = math.isqrt(f + 1)
        if u * u == f + 1:
            outcome.solutions.append((m, u))
        else:
            non_square += 1
    outcome.stats = {"candidates": m_max, "non_square": non_square}
    if not outcome.verify():
        raise AssertionError("search returned a non-solution")
    return outcome


@dataclass(frozen=True)
class Certificate:
    """Why a_n gives no m with m! = a_n^2 - 1.

    ``m_below`` is the largest m with m! < t; the next factorial exceeds t.
    ``valuations`` lists (m, v3(m!)) for the two neighbouring factorials,
    to be compared with ``combined_v3`` = v3(t).
    """

    n: int
    t: int
    m_below: int
    combined_v3: Valuation
    valuations: Tuple[Tuple[int, int], ...]

    @property
    def valuation_excludes(self) -> bool:
        return all(v != self.combined_v3 for _, v in self.valuations)


def certify_nonsolution(n: int) -> Optional[Certificate]:
    """Bracketing certificate for index n, or None if a_n solves the equation."""
    if n < 4:
        raise ValueError("n must be >= 4")
    u = narayana_fast(n)
    t = u * u - 1
    m, f = 0, 1
    while True:
        nxt = f * (m + 1)
        if f < t < nxt:
            break
        if f == t:
            return None
        m, f = m + 1, nxt
    return Certificate(
        n=n,
        t=t,
        m_below=m,
        combined_v3=combined_v3_upper(n),
        valuations=((m, vp_factorial(m, 3)), (m + 1, vp_factorial(m + 1, 3))),
    )


def check_certificate(cert: Certificate) -> bool:
    """Recompute everything a certificate claims, from scratch."""
    u = narayana_fast(cert.n)
    if cert.t != u * u - 1:
        return False
    below = math.factorial(cert.m_below)
    if not below < cert.t < below * (cert.m_below + 1):
        return False
    if vp(cert.t, 3) != cert.combined_v3:
        return False
    return all(vp_factorial(m, 3) == v for m, v in cert.valuations)
