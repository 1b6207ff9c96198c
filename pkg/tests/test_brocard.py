import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_v
from narayana_brocard.brocard import (
    FactorialCursor,
    certify_nonsolution,
    check_certificate,
    combined_v3_upper,
    is_factorial,
    search_general,
    search_narayana,
)
from narayana_brocard.laws import v3_oracle


@pytest.mark.parametrize("n, expected", [(10, 2), (4, 1), (18, 4)])
def test_combined_v3_values(n, expected, terms):
    assert combined_v3_upper(n) == expected == brute_v(terms[n] ** 2 - 1, 3)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_combined_v3_rejects_degenerate(n):
    with pytest.raises(ValueError):
        combined_v3_upper(n)


def test_combined_v3_matches_oracle():
    for n in range(4, 10_001):
        assert combined_v3_upper(n) == v3_oracle("a-1", n) + v3_oracle("a+1", n)


def test_coarse_valuation_bound():
    # the crude shape used for the explicit bound: 9 * max v3(n + w) + 16
    ws = (-1, 2, -2, 6, 30, -3, 13, 5, 4)
    for n in range(4, 5000):
        assert combined_v3_upper(n) <= 9 * max(brute_v(n + w, 3) for w in ws) + 16


# ---------------------------------------------------------------------------
# factorial cursor
# ---------------------------------------------------------------------------


def test_is_factorial_examples():
    cur = FactorialCursor()
    assert is_factorial(24, cur) == 4
    assert is_factorial(25, cur) is None
    assert is_factorial(5040, cur) == 7


def test_cursor_rejects_out_of_order():
    cur = FactorialCursor()
    cur.query(100)
    with pytest.raises(ValueError):
        cur.query(99)


@given(st.lists(st.integers(1, 10**30), max_size=40))
def test_cursor_agrees_with_direct_check(xs):
    facts = {math.factorial(m): m for m in range(1, 30)}
    cur = FactorialCursor()
    for x in sorted(xs):
        got = cur.query(x)
        if x in facts:
            assert got is not None and math.factorial(got) == x
        else:
            assert got is None


def test_cursor_step_count_is_linear():
    cur = FactorialCursor()
    for x in range(1, 10**6, 997):
        cur.query(x)
    assert cur.steps == 10  # 10! is the first factorial above 10^6


# ---------------------------------------------------------------------------
# searches
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n_max", [4, 100, 1386])
def test_search_narayana_empty(n_max):
    out = search_narayana(n_max)
    assert out.solutions == []
    assert out.stats["candidates"] == n_max - 3


def test_search_narayana_linear_factorial_work():
    out = search_narayana(1386)
    # a_1386^2 has about 1528 bits; no more factorial steps than m reached
    assert out.factorial_steps < 300


def test_search_narayana_rejects_small_range():
    with pytest.raises(ValueError):
        search_narayana(3)


@pytest.mark.parametrize("jobs", [2, 3, 7])
def test_search_parallel_deterministic(jobs):
    serial = search_narayana(500)
    par = search_narayana(500, jobs=jobs)
    assert (par.solutions, par.stats, par.scanned) == (serial.solutions, serial.stats, serial.scanned)


@pytest.mark.parametrize("m_max, expected", [(3, []), (10, [(4, 5), (5, 11), (7, 71)]), (1000, [(4, 5), (5, 11), (7, 71)])])
def test_search_general(m_max, expected):
    out = search_general(m_max)
    assert out.solutions == expected
    assert out.verify()


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n, m_below, t", [(5, 3, 8), (10, 5, 360), (7, 4, 35)])
def test_certificate_brackets(n, m_below, t):
    c = certify_nonsolution(n)
    assert (c.m_below, c.t) == (m_below, t)
    assert math.factorial(m_below) < t < math.factorial(m_below + 1)
    assert check_certificate(c)


def test_certificates_agree_with_search():
    assert search_narayana(300).solutions == []
    for n in range(4, 301):
        c = certify_nonsolution(n)
        assert c is not None and check_certificate(c)


def test_tampered_certificate_fails():
    import dataclasses

    c = certify_nonsolution(10)
    assert not check_certificate(dataclasses.replace(c, m_below=c.m_below + 1))
    assert not check_certificate(dataclasses.replace(c, combined_v3=c.combined_v3 + 1))
