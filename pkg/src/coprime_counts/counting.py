"""Exact counts of relatively prime subsets.

All sums are Mobius-weighted over d. The per-d multiplicities are small
machine integers, so the terms are first grouped by multiplicity k with the
mu weights summed per group (an int64 histogram); the big-integer part then
costs one term per distinct k instead of one per d.

Every public function accepts an optional ``table``. When given, it must
cover the largest d needed, otherwise :class:`SieveLimitError` is raised.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

import numpy as np

from . import _kernels
from .arith import MobiusTable, binomial, divisors, table_for
from .errors import DomainError
from .intset import IntSet, multiple_counts


def _check_alpha(alpha: int, size: int) -> None:
    if not 1 <= alpha <= size:
        raise DomainError(f"alpha must satisfy 1 <= alpha <= {size}, got {alpha}")


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")


def _pow2_sum(hist) -> int:
    return sum(int(w) << k for k, w in enumerate(hist) if w)


def _pow2_minus1_sum(hist) -> int:
    return sum(int(w) * ((1 << k) - 1) for k, w in enumerate(hist) if w)


def _binom_sum(hist, alpha: int) -> int:
    return sum(int(w) * binomial(k, alpha) for k, w in enumerate(hist) if w and k >= alpha)


def mobius_histogram(A: IntSet, table: MobiusTable | None = None) -> np.ndarray:
    """``h[k]`` = sum of mu(d) over 1 <= d <= sup(A) with v(A, d) = k."""
    top = A.sup
    table = table_for(top, table)
    v = multiple_counts(A, top)
    return _kernels.mobius_histogram(table.mu, v, 1, top, len(A) + 1)


def _divisor_histogram(A: IntSet, n: int, table: MobiusTable | None) -> dict:
    """Same grouping restricted to the divisors d of n."""
    table = table_for(n, table)
    v = multiple_counts(A, min(A.sup, n))
    hist = defaultdict(int)
    for d in divisors(n):
        m = int(table.mu[d])
        if m:
            hist[int(v[d]) if d < len(v) else 0] += m
    return hist


def _as_list(hist: dict) -> list:
    out = [0] * (max(hist, default=0) + 1)
    for k, w in hist.items():
        out[k] = w
    return out


def phi_set(A: IntSet, n: int, *, table: MobiusTable | None = None) -> int:
    """Nonempty subsets X of A with gcd(X, n) = 1.

    For n = 1 the Mobius sum also counts the empty set, which is removed.
    """
    _check_n(n)
    total = _pow2_sum(_as_list(_divisor_histogram(A, n, table)))
    return total - 1 if n == 1 else total


def phi_alpha(A: IntSet, n: int, alpha: int, *, table: MobiusTable | None = None) -> int:
    """Subsets X of A with |X| = alpha and gcd(X, n) = 1."""
    _check_n(n)
    _check_alpha(alpha, len(A))
    return _binom_sum(_as_list(_divisor_histogram(A, n, table)), alpha)


def f_set(A: IntSet, *, table: MobiusTable | None = None) -> int:
    """Nonempty subsets X of A with gcd(X) = 1."""
    if not len(A):
        raise DomainError("f_set needs a nonempty set")
    return _pow2_minus1_sum(mobius_histogram(A, table))


def f_alpha(A: IntSet, alpha: int, *, table: MobiusTable | None = None) -> int:
    """Subsets X of A with |X| = alpha and gcd(X) = 1."""
    _check_alpha(alpha, len(A))
    return _binom_sum(mobius_histogram(A, table), alpha)


def _check_perm(perm: Sequence[int], k: int) -> list[int]:
    perm = [int(i) for i in perm]
    if sorted(perm) != list(range(k)):
        raise DomainError(f"not a permutation of 0..{k - 1}: {perm}")
    return perm


def f_incremental_terms(
    A: IntSet,
    perm: Sequence[int] | None = None,
    alpha: int | None = None,
    *,
    table: MobiusTable | None = None,
) -> list[int]:
    """Per-step contributions of the insertion-order formula.

    Elements are added in the order ``A.elements[perm[0]], A.elements[perm[1]], ...``
    (0-based; identity if omitted). Step j contributes
    sum_{d | a_j} mu(d) * g(v(prefix, d)), where the prefix holds the
    elements added before a_j and g(v) is 2**v, or C(v, alpha - 1) when
    ``alpha`` is given. The steps sum to f(A) or f_alpha(A).
    """
    k = len(A)
    perm = list(range(k)) if perm is None else _check_perm(perm, k)
    if alpha is not None:
        _check_alpha(alpha, k)
    table = table_for(A.sup, table)
    mu = table.mu
    seen = defaultdict(int)  # d -> multiples of d among elements added so far
    terms = []
    for idx in perm:
        a = A.elements[idx]
        step = 0
        sqfree = [d for d in divisors(a) if mu[d]]
        for d in sqfree:
            v = seen[d]
            g = (1 << v) if alpha is None else binomial(v, alpha - 1)
            step += int(mu[d]) * g
        for d in sqfree:
            seen[d] += 1
        terms.append(step)
    return terms


def f_incremental(
    A: IntSet,
    perm: Sequence[int] | None = None,
    alpha: int | None = None,
    *,
    table: MobiusTable | None = None,
) -> int:
    return sum(f_incremental_terms(A, perm, alpha, table=table))


def _interval_counts(l: int, m: int, dmax: int) -> np.ndarray:
    # counts[d] = floor(m/d) - floor((l-1)/d), the multiples of d in [l, m]
    d = np.arange(1, dmax + 1, dtype=np.int64)
    counts = np.zeros(dmax + 1, dtype=np.int64)
    counts[1:] = m // d - (l - 1) // d
    return counts


def _check_interval(l: int, m: int) -> None:
    if l < 1 or l > m:
        raise DomainError(f"need 1 <= l <= m, got l={l}, m={m}")


def f_interval(
    l: int, m: int, alpha: int | None = None, *, table: MobiusTable | None = None
) -> int:
    """f or f_alpha of the interval [l, m] without materialising the set."""
    _check_interval(l, m)
    if alpha is not None:
        _check_alpha(alpha, m - l + 1)
    table = table_for(m, table)
    counts = _interval_counts(l, m, m)
    hist = _kernels.mobius_histogram(table.mu, counts, 1, m, m - l + 2)
    if alpha is None:
        return _pow2_minus1_sum(hist)
    return _binom_sum(hist, alpha)


def phi_interval(
    l: int,
    m: int,
    n: int,
    alpha: int | None = None,
    *,
    table: MobiusTable | None = None,
) -> int:
    """Phi or Phi_alpha of the interval [l, m] relative to n."""
    _check_interval(l, m)
    _check_n(n)
    if alpha is not None:
        _check_alpha(alpha, m - l + 1)
    table = table_for(n, table)
    hist = defaultdict(int)
    for d in divisors(n):
        w = int(table.mu[d])
        if w:
            hist[m // d - (l - 1) // d] += w
    hist = _as_list(hist)
    if alpha is not None:
        return _binom_sum(hist, alpha)
    total = _pow2_sum(hist)
    return total - 1 if n == 1 else total


def coprime_element_count(A: IntSet, n: int, *, table: MobiusTable | None = None) -> int:
    """Elements a of A with gcd(a, n) = 1."""
    _check_n(n)
    hist = _divisor_histogram(A, n, table)
    return sum(k * w for k, w in hist.items())


__all__ = [
    "coprime_element_count",
    "f_alpha",
    "f_incremental",
    "f_incremental_terms",
    "f_interval",
    "f_set",
    "mobius_histogram",
    "phi_alpha",
    "phi_interval",
    "phi_set",
]
