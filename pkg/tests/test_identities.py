import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprime_counts import (
    DomainError,
    build_mobius_table,
    f_set,
    gcd_set,
    make_set,
    mertens_bound,
    mertens_pair,
    mertens_triple,
    scaled_mertens,
)
from coprime_counts.identities import IdentityReport, triple_case

from .conftest import int_sets


@pytest.mark.parametrize(
    "m, n, lhs, case",
    [(2, 4, -1, "not-coprime"), (3, 4, 0, "coprime"), (2, 2, 0, "not-coprime")],
)
def test_pair_examples(m, n, lhs, case):
    r = mertens_pair(m, n)
    assert (r.lhs, r.rhs_expected, r.case_label, r.holds) == (lhs, lhs, case, True)


@pytest.mark.parametrize(
    "l, m, n, lhs, case",
    [
        (2, 3, 5, 2, "all-pairs-coprime"),
        (2, 3, 4, 2, "two-pairs-coprime"),
        (2, 4, 6, -1, "otherwise"),
    ],
)
def test_triple_examples(l, m, n, lhs, case):
    r = mertens_triple(l, m, n)
    assert (r.lhs, r.case_label, r.holds) == (lhs, case, True)


def test_triple_remaining_branches():
    assert triple_case(2, 6, 9) == (2, "one-pair-coprime")
    assert triple_case(6, 10, 15) == (1, "no-pair-coprime-gcd-1")
    assert mertens_triple(2, 6, 9).holds
    assert mertens_triple(6, 10, 15).holds


def test_ordering_errors():
    for m, n in ((1, 4), (5, 4)):
        with pytest.raises(DomainError):
            mertens_pair(m, n)
    for args in ((1, 3, 4), (3, 3, 4), (2, 5, 4)):
        with pytest.raises(DomainError):
            mertens_triple(*args)


def test_pair_exhaustive():
    table = build_mobius_table(120)
    for n in range(2, 121):
        for m in range(2, n + 1):
            assert mertens_pair(m, n, table=table).holds, (m, n)


def test_triple_exhaustive_and_cases_partition():
    table = build_mobius_table(60)
    seen = set()
    for n in range(4, 61):
        for m in range(3, n + 1):
            for l in range(2, m):
                r = mertens_triple(l, m, n, table=table)
                assert r.holds, (l, m, n)
                seen.add(r.case_label)
    assert len(seen) == 5


def test_bound_examples():
    r = mertens_bound(make_set([2, 4, 6]))
    assert (r.lhs, r.rhs_expected, r.case_label, r.holds) == (-1, -1, "equality", True)
    r = mertens_bound(make_set([2, 3]))
    assert (r.lhs, r.rhs_expected, r.case_label, r.holds) == (0, -1, "strict", False)
    r = mertens_bound(make_set([1]))
    assert (r.lhs, r.rhs_expected, r.holds) == (2, 1, False)


@settings(max_examples=300, deadline=None)
@given(int_sets(max_size=10, max_value=80))
def test_bound_gap_is_f(A):
    r = mertens_bound(A)
    assert r.lhs - r.rhs_expected == f_set(A) >= 0
    assert r.holds == (gcd_set(A) > 1)


@pytest.mark.parametrize(
    "elems, a, b", [([1, 2], 2, 3), ([3], 3, 2), ([1, 2], 2, 2)]
)
def test_scaled_examples(elems, a, b):
    r = scaled_mertens(make_set(elems), a, b)
    assert r.lhs == r.rhs_expected == -1 and r.holds


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 12), st.integers(2, 12), st.data())
def test_scaled_always_holds(a, b, data):
    rest = data.draw(st.lists(st.integers(1, a - 1), unique=True)) if a > 1 else []
    assert scaled_mertens(make_set(rest + [a]), a, b).holds


def test_scaled_errors():
    A = make_set([1, 2])
    for a, b in ((1, 3), (2, 1), (3, 3)):
        with pytest.raises(DomainError):
            scaled_mertens(A, a, b)


def test_report_dict():
    r = IdentityReport("pair", 0, 0, "coprime")
    assert r.as_dict() == {
        "identity": "pair", "lhs": "0", "rhs": "0", "case": "coprime", "holds": True
    }
