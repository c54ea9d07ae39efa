"""Finite sets of positive integers and their multiples structure."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .errors import DomainError


@dataclass(frozen=True)
class IntSet:
    """A strictly increasing tuple of positive integers.

    Public constructors (:func:`make_set`, :func:`parse_set`) never return
    the empty set. ``IntSet(())`` is allowed only as the empty prefix in
    incremental sums, where every multiplicity count is zero.
    """

    elements: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for a in self.elements:
            if a <= prev:
                raise DomainError("IntSet elements must be positive and strictly increasing")
            prev = a

    @property
    def sup(self) -> int:
        return self.elements[-1] if self.elements else 0

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.elements)) + "}"

    def as_array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)


EMPTY = IntSet(())


def make_set(values: Iterable[int]) -> IntSet:
    vals = [int(v) for v in values]
    if not vals:
        raise DomainError("a set must have at least one element")
    bad = [v for v in vals if v < 1]
    if bad:
        raise DomainError(f"set elements must be positive integers, got {bad[0]}")
    return IntSet(tuple(sorted(set(vals))))


def interval(l: int, m: int) -> IntSet:
    """The set {l, l+1, ..., m}."""
    if l < 1 or l > m:
        raise DomainError(f"need 1 <= l <= m, got l={l}, m={m}")
    return IntSet(tuple(range(l, m + 1)))


def _check_d(d: int) -> None:
    if d < 1:
        raise DomainError(f"divisor must be >= 1, got {d}")


def multiples_of(A: IntSet, d: int) -> IntSet:
    _check_d(d)
    return IntSet(tuple(a for a in A if a % d == 0))


def count_multiples(A: IntSet, d: int) -> int:
    _check_d(d)
    return sum(1 for a in A if a % d == 0)


def count_multiples_floor(A: IntSet, d: int) -> int:
    """Multiples of ``d`` in ``A`` counted as a sum of floor differences."""
    _check_d(d)
    return sum(a // d - (a - 1) // d for a in A)


def multiple_counts(A: IntSet, limit: int | None = None) -> np.ndarray:
    """Array ``v`` with ``v[d]`` = number of multiples of d in A, 1 <= d <= limit.

    ``limit`` defaults to ``sup(A)``; entries past sup(A) are zero.
    """
    if limit is None:
        limit = A.sup
    return _kernels.multiple_counts(A.as_array(), limit)


def scale_set(A: IntSet, b: int) -> IntSet:
    if b < 1:
        raise DomainError(f"scale factor must be >= 1, got {b}")
    return IntSet(tuple(b * a for a in A))


def parse_set(text: str) -> IntSet:
    """Parse ``"2, 3, 4"`` (whitespace ignored) into an IntSet."""
    try:
        values = [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise DomainError(f"not a comma-separated list of integers: {text!r}") from exc
    return make_set(values)


def read_set_file(path) -> IntSet:
    """One integer per line; blank lines and ``#`` comments are skipped."""
    values = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(int(line))
        except ValueError as exc:
            raise DomainError(f"{path}:{lineno}: not an integer: {line!r}") from exc
    return make_set(values)
