"""Mertens-function identities evaluated on concrete inputs."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import MobiusTable, gcd_set, table_for
from .counting import _pow2_sum, mobius_histogram
from .errors import DomainError
from .intset import IntSet, scale_set


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: int
    rhs_expected: int
    case_label: str

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs_expected

    def as_dict(self) -> dict:
        return {
            "identity": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs_expected),
            "case": self.case_label,
            "holds": self.holds,
        }


def _indicator(x: int, d: np.ndarray) -> np.ndarray:
    # 1 where d | x, written as floor(x/d) - floor((x-1)/d)
    return x // d - (x - 1) // d


def _indicator_sum(values, n: int, table: MobiusTable) -> int:
    """sum_{d=1..n} mu(d) * 2**(sum_x [d | x]).

    Repeated values each contribute their own indicator, so a repeated
    argument doubles the exponent rather than collapsing as a set would.
    """
    d = np.arange(1, n + 1, dtype=np.int64)
    exponent = sum(_indicator(x, d) for x in values)
    return int((table.mu[1 : n + 1].astype(np.int64) << exponent).sum())


def mertens_pair(m: int, n: int, *, table: MobiusTable | None = None) -> IdentityReport:
    """sum_d mu(d) 2^([d|n] + [d|m]) against M(n) (+1 when gcd(m, n) = 1)."""
    if not 1 < m <= n:
        raise DomainError(f"need 1 < m <= n, got m={m}, n={n}")
    table = table_for(n, table)
    lhs = _indicator_sum((m, n), n, table)
    coprime = math.gcd(m, n) == 1
    rhs = table.mertens(n) + (1 if coprime else 0)
    return IdentityReport("pair", lhs, rhs, "coprime" if coprime else "not-coprime")


_TRIPLE_CASES = {
    3: (4, "all-pairs-coprime"),
    2: (3, "two-pairs-coprime"),
    1: (2, "one-pair-coprime"),
}


def triple_case(l: int, m: int, n: int) -> tuple[int, str]:
    """Offset over M(n) and the case name for the triple identity."""
    pairs = sum(math.gcd(x, y) == 1 for x, y in ((l, m), (l, n), (m, n)))
    if pairs in _TRIPLE_CASES:
        return _TRIPLE_CASES[pairs]
    if math.gcd(math.gcd(l, m), n) == 1:
        return 1, "no-pair-coprime-gcd-1"
    return 0, "otherwise"


def mertens_triple(
    l: int, m: int, n: int, *, table: MobiusTable | None = None
) -> IdentityReport:
    if not 1 < l < m <= n:
        raise DomainError(f"need 1 < l < m <= n, got l={l}, m={m}, n={n}")
    table = table_for(n, table)
    lhs = _indicator_sum((l, m, n), n, table)
    offset, label = triple_case(l, m, n)
    return IdentityReport("triple", lhs, table.mertens(n) + offset, label)


def mertens_bound(A: IntSet, *, table: MobiusTable | None = None) -> IdentityReport:
    """sum_{d <= sup A} mu(d) 2^v(A,d) against M(sup A).

    The left side is never below M(sup A) and meets it exactly when
    gcd(A) > 1; the gap is f(A). ``holds`` reports equality, so it is
    False for relatively prime sets.
    """
    if not len(A):
        raise DomainError("empty set")
    table = table_for(A.sup, table)
    lhs = _pow2_sum(mobius_histogram(A, table))
    rhs = table.mertens(A.sup)
    label = "equality" if gcd_set(A) > 1 else "strict"
    if lhs < rhs or (lhs == rhs) != (label == "equality"):
        raise ArithmeticError(f"Mertens bound violated for {A}: lhs={lhs}, M={rhs}")
    return IdentityReport("bound", lhs, rhs, label)


def scaled_mertens(
    A: IntSet, a: int, b: int, *, table: MobiusTable | None = None
) -> IdentityReport:
    """M(ab) = sum_{d <= ab} mu(d) 2^v(bA, d) whenever sup A = a and a, b > 1."""
    if a <= 1 or b <= 1:
        raise DomainError(f"need a > 1 and b > 1, got a={a}, b={b}")
    if A.sup != a:
        raise DomainError(f"sup of the set must equal a={a}, got {A.sup}")
    c = a * b
    table = table_for(c, table)
    bA = scale_set(A, b)
    lhs = _pow2_sum(mobius_histogram(bA, table))
    return IdentityReport("scaled", lhs, table.mertens(c), f"c={c}")
