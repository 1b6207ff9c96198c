import pytest


def brute_terms(count):
    """a_0 .. a_{count-1} from a plain list, independent of the library."""
    terms = [0, 1, 1]
    while len(terms) < count:
        terms.append(terms[-1] + terms[-3])
    return terms[:count]


def brute_v(x, p):
    """Exponent of p in x by repeated division; None for x == 0."""
    if x == 0:
        return None
    x, e = abs(x), 0
    while x % p == 0:
        x //= p
        e += 1
    return e


@pytest.fixture(scope="session")
def terms():
    return brute_terms(12_000)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
