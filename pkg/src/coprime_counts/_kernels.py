"""Integer array kernels behind the exact counting layer.

Each kernel has a numba version and a pure-numpy version with identical
output. The active backend is picked once at import time:

    COPRIME_COUNTS_BACKEND=numpy   force the numpy path
    COPRIME_COUNTS_BACKEND=numba   require numba (ImportError if missing)

Unset means numba when importable, numpy otherwise. Both implementations
stay importable under explicit names so tests and the benchmark can
compare them directly.

Only fixed-width quantities live here (mu values, multiplicity counts,
histograms of signed mu sums). Anything that can exceed 64 bits, such as
powers of two and binomials, is assembled from these in Python ints.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_REQUESTED = os.environ.get("COPRIME_COUNTS_BACKEND", "").strip().lower()
if _REQUESTED not in ("", "numba", "numpy"):
    raise ValueError(
        f"COPRIME_COUNTS_BACKEND must be 'numba' or 'numpy', got {_REQUESTED!r}"
    )
if _REQUESTED == "numba" and numba is None:  # pragma: no cover
    raise ImportError("COPRIME_COUNTS_BACKEND=numba but numba is not installed")

HAVE_NUMBA = numba is not None
BACKEND = "numpy" if (_REQUESTED == "numpy" or not HAVE_NUMBA) else "numba"


# ---------------------------------------------------------------------------
# numpy implementations


def mobius_sieve_numpy(limit):
    """mu[0..limit] as int8, mu[0] = 0."""
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    if limit < 2:
        return mu
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    for p in np.flatnonzero(is_prime):
        mu[p::p] *= -1
        sq = p * p
        if sq <= limit:
            mu[sq::sq] = 0
    return mu


def multiple_counts_numpy(elements, limit):
    """counts[d] = #{a in elements : d | a} for 1 <= d <= limit; counts[0] = 0.

    ``elements`` must be distinct positive integers.
    """
    elements = np.asarray(elements, dtype=np.int64)
    counts = np.zeros(limit + 1, dtype=np.int64)
    if elements.size == 0 or limit < 1:
        return counts
    top = int(elements.max())
    present = np.zeros(top + 1, dtype=np.int64)
    present[elements] = 1
    for d in range(1, min(limit, top) + 1):
        counts[d] = present[d::d].sum()
    return counts


def mobius_histogram_numpy(mu, counts, lo, hi, size):
    """hist[k] = sum of mu[d] over lo <= d <= hi with counts[d] == k.

    ``size`` must exceed max(counts[lo:hi+1]).
    """
    if hi < lo:
        return np.zeros(size, dtype=np.int64)
    return np.bincount(
        counts[lo : hi + 1],
        weights=mu[lo : hi + 1].astype(np.int64),
        minlength=size,
    ).astype(np.int64)


# ---------------------------------------------------------------------------
# numba implementations

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def mobius_sieve_numba(limit):
        # linear sieve: each composite is crossed out once by its least prime
        mu = np.zeros(limit + 1, dtype=np.int8)
        if limit >= 1:
            mu[1] = 1
        composite = np.zeros(limit + 1, dtype=np.bool_)
        primes = np.empty(limit + 1, dtype=np.int64)
        n_primes = 0
        for i in range(2, limit + 1):
            if not composite[i]:
                primes[n_primes] = i
                n_primes += 1
                mu[i] = -1
            for j in range(n_primes):
                p = primes[j]
                ip = i * p
                if ip > limit:
                    break
                composite[ip] = True
                if i % p == 0:
                    mu[ip] = 0
                    break
                mu[ip] = -mu[i]
        return mu

    @numba.njit(cache=True)
    def multiple_counts_numba(elements, limit):
        counts = np.zeros(limit + 1, dtype=np.int64)
        if elements.size == 0 or limit < 1:
            return counts
        top = 0
        for a in elements:
            if a > top:
                top = a
        present = np.zeros(top + 1, dtype=np.bool_)
        for a in elements:
            present[a] = True
        stop = min(limit, top)
        for d in range(1, stop + 1):
            c = 0
            for k in range(d, top + 1, d):
                if present[k]:
                    c += 1
            counts[d] = c
        return counts

    @numba.njit(cache=True)
    def mobius_histogram_numba(mu, counts, lo, hi, size):
        hist = np.zeros(size, dtype=np.int64)
        for d in range(lo, hi + 1):
            m = mu[d]
            if m != 0:
                hist[counts[d]] += m
        return hist

else:  # pragma: no cover
    mobius_sieve_numba = None
    multiple_counts_numba = None
    mobius_histogram_numba = None


# ---------------------------------------------------------------------------
# dispatch

if BACKEND == "numba":
    _mobius_sieve = mobius_sieve_numba
    _multiple_counts = multiple_counts_numba
    _mobius_histogram = mobius_histogram_numba
else:
    _mobius_sieve = mobius_sieve_numpy
    _multiple_counts = multiple_counts_numpy
    _mobius_histogram = mobius_histogram_numpy


def mobius_sieve(limit):
    return _mobius_sieve(int(limit))


def multiple_counts(elements, limit):
    return _multiple_counts(np.asarray(elements, dtype=np.int64), int(limit))


def mobius_histogram(mu, counts, lo, hi, size):
    return _mobius_histogram(mu, counts, int(lo), int(hi), int(size))
