"""Brute-force subset enumeration.

Deliberately naive and independent of the Mobius machinery: every nonempty
subset is visited in bitmask order and tested with plain gcd arithmetic.
Use it as ground truth on small sets only.
"""

from __future__ import annotations

import enum
import math
import os
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, EnumerationLimitError

DEFAULT_MAX_ENUM = 20


def max_enum() -> int:
    """Largest |A| accepted for subset enumeration (env COPRIME_COUNTS_MAX_ENUM)."""
    raw = os.environ.get("COPRIME_COUNTS_MAX_ENUM")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"COPRIME_COUNTS_MAX_ENUM must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError("COPRIME_COUNTS_MAX_ENUM must be nonnegative")
    return value


def check_enumerable(size: int, limit: int | None = None) -> None:
    limit = max_enum() if limit is None else limit
    if size > limit:
        raise EnumerationLimitError(
            f"refusing to enumerate 2^{size} subsets (limit |A| <= {limit})"
        )


class Kind(enum.Enum):
    RELPRIME = "relprime"
    RELPRIME_TO_N = "relprime-to-n"
    PAIRWISE = "pairwise"
    COPRIME_FREE = "coprime-free"


@dataclass(frozen=True)
class SubsetPredicate:
    kind: Kind
    n: int | None = None
    cardinality: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.RELPRIME_TO_N and (self.n is None or self.n < 1):
            raise DomainError("relprime-to-n needs n >= 1")
        if self.cardinality is not None and self.cardinality < 1:
            raise DomainError("cardinality filter must be >= 1")

    def __call__(self, X) -> bool:
        if self.kind is Kind.RELPRIME:
            g = 0
            for x in X:
                g = math.gcd(g, x)
            return g == 1
        if self.kind is Kind.RELPRIME_TO_N:
            g = self.n
            for x in X:
                g = math.gcd(g, x)
            return g == 1
        pairs = combinations(X, 2)
        if self.kind is Kind.PAIRWISE:
            return all(math.gcd(x, y) == 1 for x, y in pairs)
        return all(math.gcd(x, y) > 1 for x, y in pairs)


def subsets(A):
    """Yield every nonempty subset of ``A`` as a tuple, in bitmask order."""
    elems = tuple(A)
    for mask in range(1, 1 << len(elems)):
        yield tuple(e for i, e in enumerate(elems) if mask >> i & 1)


def brute_count(A, pred: SubsetPredicate, *, limit: int | None = None) -> int:
    check_enumerable(len(A), limit)
    want = pred.cardinality
    count = 0
    for X in subsets(A):
        if want is not None and len(X) != want:
            continue
        if pred(X):
            count += 1
    return count


def gcd_profile(A, *, limit: int | None = None) -> Counter:
    """Tally of (gcd(X), |X|) over every nonempty subset X of A.

    One enumeration answers every relatively-prime and relatively-prime-to-n
    question about A: X is relatively prime to n iff gcd(gcd(X), n) == 1.
    gcd(X) is built from the subset with its lowest element removed.
    """
    check_enumerable(len(A), limit)
    elems = tuple(A)
    gcds = [0] * (1 << len(elems))
    sizes = [0] * (1 << len(elems))
    tally = Counter()
    for mask in range(1, 1 << len(elems)):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        gcds[mask] = math.gcd(gcds[rest], elems[low])
        sizes[mask] = sizes[rest] + 1
        tally[gcds[mask], sizes[mask]] += 1
    return tally


def count_from_profile(profile: Counter, n: int = 0, cardinality: int | None = None) -> int:
    """Subsets X with gcd(gcd(X), n) == 1 (n = 0 means gcd(X) == 1)."""
    return sum(
        c
        for (g, size), c in profile.items()
        if math.gcd(g, n) == 1 and (cardinality is None or size == cardinality)
    )
