import random

import pytest
from hypothesis import strategies as st

from coprime_counts import make_set


def trial_mobius(n):
    """mu(n) by trial-division factorisation; independent of the sieve."""
    sign, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if n > 1 else sign


def random_set(rng, max_size, max_value):
    size = rng.randint(1, min(max_size, max_value))
    return make_set(rng.sample(range(1, max_value + 1), size))


def int_sets(max_size=8, max_value=40):
    return st.lists(
        st.integers(1, max_value), min_size=1, max_size=max_size, unique=True
    ).map(make_set)


@pytest.fixture
def rng():
    return random.Random(20261016)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
