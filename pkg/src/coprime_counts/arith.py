"""Number-theoretic primitives: Mobius table, Mertens sums, divisors, gcd,
exact binomials and Euler's phi."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from . import _kernels
from .errors import DomainError, SieveLimitError


@dataclass(frozen=True, eq=False)
class MobiusTable:
    """Sieved mu(d) and Mertens prefix sums for 1 <= d <= limit.

    Both arrays are indexed directly by d (index 0 is padding) and are
    read-only.
    """

    limit: int
    mu: np.ndarray
    mertens_prefix: np.ndarray

    def mobius(self, d: int) -> int:
        self._check(d)
        return int(self.mu[d])

    def mertens(self, n: int) -> int:
        self._check(n)
        return int(self.mertens_prefix[n])

    def covers(self, n: int) -> bool:
        return n <= self.limit

    def _check(self, n: int) -> None:
        if n < 1:
            raise DomainError(f"argument must be >= 1, got {n}")
        if n > self.limit:
            raise SieveLimitError(f"{n} exceeds sieve limit {self.limit}")


def build_mobius_table(limit: int) -> MobiusTable:
    if limit < 1:
        raise DomainError(f"sieve limit must be >= 1, got {limit}")
    mu = _kernels.mobius_sieve(limit)
    prefix = np.cumsum(mu, dtype=np.int64)
    mu.flags.writeable = False
    prefix.flags.writeable = False
    return MobiusTable(int(limit), mu, prefix)


@lru_cache(maxsize=8)
def _cached_table(limit: int) -> MobiusTable:
    return build_mobius_table(limit)


def table_for(limit: int, table: MobiusTable | None = None) -> MobiusTable:
    """Return ``table`` if it covers ``limit``, else a cached table.

    A caller-supplied table is never silently replaced: if it is too small
    this raises :class:`SieveLimitError`.
    """
    limit = max(int(limit), 1)
    if table is None:
        # small limits round up so nearby requests share one sieve
        if limit <= 1 << 16:
            limit = max(64, 1 << (limit - 1).bit_length())
        return _cached_table(limit)
    if limit > table.limit:
        raise SieveLimitError(f"need mu up to {limit}, sieve limit is {table.limit}")
    return table


def mertens(table: MobiusTable, n: int) -> int:
    return table.mertens(n)


def divisors(n: int) -> list[int]:
    """Divisors of ``n`` in increasing order."""
    if n < 1:
        raise DomainError(f"divisors() needs n >= 1, got {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def gcd_set(values) -> int:
    values = list(values)
    if not values:
        raise DomainError("gcd of an empty collection is undefined")
    return reduce(math.gcd, values)


def binomial(n: int, k: int) -> int:
    """C(n, k) exactly; zero when k > n.

    Built by multiplicative descent so every intermediate value is itself a
    binomial coefficient.
    """
    if n < 0 or k < 0:
        raise DomainError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"euler_phi needs n >= 1, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result
