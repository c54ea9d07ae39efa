"""Alpha-relatively-prime classification and pairwise-coprime tests."""

from __future__ import annotations

import enum
import math
from itertools import combinations
from typing import Sequence

from .arith import MobiusTable, binomial, table_for
from .counting import f_alpha, f_incremental, phi_alpha
from .errors import DomainError
from .intset import IntSet, multiple_counts
from .oracle import check_enumerable


class AlphaStatus(enum.Enum):
    ALL = "All"
    NONE = "None"
    MIXED = "Mixed"

    def __str__(self):
        return self.value


def _status(count: int, total: int) -> AlphaStatus:
    if count == total:
        return AlphaStatus.ALL
    if count == 0:
        return AlphaStatus.NONE
    return AlphaStatus.MIXED


def alpha_status(A: IntSet, alpha: int, *, table: MobiusTable | None = None) -> AlphaStatus:
    """Whether all, none, or some of the alpha-subsets of A have gcd 1."""
    count = f_alpha(A, alpha, table=table)
    return _status(count, binomial(len(A), alpha))


def alpha_status_to_n(
    A: IntSet, alpha: int, n: int, *, table: MobiusTable | None = None
) -> AlphaStatus:
    count = phi_alpha(A, n, alpha, table=table)
    return _status(count, binomial(len(A), alpha))


def pair_sum(A: IntSet, *, table: MobiusTable | None = None) -> int:
    """S(A) = sum over d of mu(d) * v(A,d) * (v(A,d) - 1).

    Equals twice the number of coprime pairs in A.
    """
    top = A.sup
    table = table_for(top, table)
    v = multiple_counts(A, top)
    mu = table.mu[: top + 1]
    return int((mu.astype("int64") * v * (v - 1)).sum())


def incremental_pair_sum(
    A: IntSet, perm: Sequence[int] | None = None, *, table: MobiusTable | None = None
) -> int:
    """T(A): the insertion-order sum counting coprime pairs once each."""
    return f_incremental(A, perm, 2, table=table) if len(A) >= 2 else 0


METHODS = ("sqrt", "incremental", "direct")


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise DomainError(f"method must be one of {METHODS}, got {method!r}")


def is_pairwise_coprime(
    A: IntSet,
    method: str = "sqrt",
    perm: Sequence[int] | None = None,
    *,
    table: MobiusTable | None = None,
) -> bool:
    """True iff every two distinct elements of A are coprime.

    ``sqrt`` checks (2|A| - 1)**2 == 1 + 4*S(A); ``incremental`` checks
    (2|A| - 1)**2 == 1 + 8*T(A) for the insertion order ``perm``;
    ``direct`` tests every pair. All comparisons are on integers.
    """
    _check_method(method)
    if not len(A):
        raise DomainError("empty set")
    lhs = (2 * len(A) - 1) ** 2
    if method == "sqrt":
        return lhs == 1 + 4 * pair_sum(A, table=table)
    if method == "incremental":
        return lhs == 1 + 8 * incremental_pair_sum(A, perm, table=table)
    return all(math.gcd(x, y) == 1 for x, y in combinations(A, 2))


def is_coprime_free(
    A: IntSet,
    method: str = "sqrt",
    perm: Sequence[int] | None = None,
    *,
    table: MobiusTable | None = None,
) -> bool:
    """True iff no two distinct elements of A are coprime."""
    _check_method(method)
    if not len(A):
        raise DomainError("empty set")
    if method == "sqrt":
        return pair_sum(A, table=table) == 0
    if method == "incremental":
        return incremental_pair_sum(A, perm, table=table) == 0
    return all(math.gcd(x, y) > 1 for x, y in combinations(A, 2))


def _subset_pair_sums(A: IntSet, table: MobiusTable | None):
    """Yield (|B|, S(B)) for every nonempty B subset of A.

    For each squarefree d > 1 dividing two or more elements, keep a bitmask
    of those elements; then v(B, d) is a popcount. d = 1 always contributes
    |B| * (|B| - 1).
    """
    elems = A.elements
    table = table_for(A.sup, table)
    v = multiple_counts(A, A.sup)
    masks = []
    for d in range(2, A.sup + 1):
        w = int(table.mu[d])
        if w and v[d] >= 2:
            mask = 0
            for i, a in enumerate(elems):
                if a % d == 0:
                    mask |= 1 << i
            masks.append((w, mask))
    for B in range(1, 1 << len(elems)):
        size = B.bit_count()
        s = size * (size - 1)
        for w, mask in masks:
            c = (B & mask).bit_count()
            if c >= 2:
                s += w * c * (c - 1)
        yield size, s


def count_pairwise_coprime_subsets(
    A: IntSet, *, table: MobiusTable | None = None, limit: int | None = None
) -> int:
    """Nonempty subsets B of A with (2|B| - 1)**2 == 1 + 4*S(B)."""
    check_enumerable(len(A), limit)
    return sum(1 for size, s in _subset_pair_sums(A, table) if (2 * size - 1) ** 2 == 1 + 4 * s)


def count_coprime_free_subsets(
    A: IntSet, *, table: MobiusTable | None = None, limit: int | None = None
) -> int:
    """Nonempty subsets B of A with S(B) == 0."""
    check_enumerable(len(A), limit)
    return sum(1 for _, s in _subset_pair_sums(A, table) if s == 0)
