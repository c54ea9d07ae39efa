import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprime_counts import _kernels

from .conftest import trial_mobius

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


@pytest.mark.parametrize("impl", ["numpy", "numba"])
def test_sieve_matches_trial_division(impl):
    sieve = getattr(_kernels, f"mobius_sieve_{impl}")
    if sieve is None:
        pytest.skip("numba not installed")
    mu = sieve(2000)
    assert mu[0] == 0
    assert [int(x) for x in mu[1:]] == [trial_mobius(n) for n in range(1, 2001)]


@needs_numba
@pytest.mark.parametrize("limit", [1, 2, 3, 4, 97, 1000, 65536])
def test_sieve_backends_agree(limit):
    np.testing.assert_array_equal(
        _kernels.mobius_sieve_numba(limit), _kernels.mobius_sieve_numpy(limit)
    )


@needs_numba
@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(1, 300), min_size=0, max_size=30, unique=True),
    st.integers(1, 400),
)
def test_multiple_counts_backends_agree(elements, limit):
    arr = np.array(elements, dtype=np.int64)
    a = _kernels.multiple_counts_numba(arr, limit)
    b = _kernels.multiple_counts_numpy(arr, limit)
    np.testing.assert_array_equal(a, b)
    brute = [0] + [sum(1 for e in elements if e % d == 0) for d in range(1, limit + 1)]
    assert a.tolist() == brute


@needs_numba
@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=2, max_size=80), st.data())
def test_histogram_backends_agree(counts, data):
    n = len(counts) - 1
    counts = np.array(counts, dtype=np.int64)
    mu = _kernels.mobius_sieve_numpy(n)
    lo = data.draw(st.integers(1, n))
    hi = data.draw(st.integers(lo - 1, n))
    a = _kernels.mobius_histogram_numba(mu, counts, lo, hi, 7)
    b = _kernels.mobius_histogram_numpy(mu, counts, lo, hi, 7)
    np.testing.assert_array_equal(a, b)
    expected = [0] * 7
    for d in range(lo, hi + 1):
        expected[counts[d]] += int(mu[d])
    assert a.tolist() == expected


@pytest.mark.parametrize("flag, expected", [("numpy", "numpy"), ("", "numba")])
def test_backend_env_flag(flag, expected):
    if expected == "numba" and not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    env = dict(os.environ, COPRIME_COUNTS_BACKEND=flag)
    out = subprocess.run(
        [sys.executable, "-c", "import coprime_counts; print(coprime_counts.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == expected


def test_backend_env_flag_rejects_garbage():
    env = dict(os.environ, COPRIME_COUNTS_BACKEND="fortran")
    out = subprocess.run(
        [sys.executable, "-c", "import coprime_counts"], env=env, capture_output=True, text=True
    )
    assert out.returncode != 0
    assert "COPRIME_COUNTS_BACKEND" in out.stderr
