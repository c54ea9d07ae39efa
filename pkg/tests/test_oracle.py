import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coprime_counts import EnumerationLimitError, SubsetPredicate, brute_count, make_set
from coprime_counts.errors import DomainError
from coprime_counts.oracle import Kind, subsets

from .conftest import int_sets

A234 = make_set([2, 3, 4])


@pytest.mark.parametrize(
    "kind, expected", [("relprime", 3), ("pairwise", 5), ("coprime-free", 4)]
)
def test_hand_enumerated(kind, expected):
    assert brute_count(A234, SubsetPredicate(kind)) == expected


def test_subsets_in_mask_order():
    assert list(subsets(A234)) == [(2,), (3,), (2, 3), (4,), (2, 4), (3, 4), (2, 3, 4)]


@given(int_sets(max_size=9))
def test_relprime_complement(A):
    total = 2 ** len(A) - 1
    coprime = brute_count(A, SubsetPredicate(Kind.RELPRIME))
    non = sum(1 for X in subsets(A) if math.gcd(*X) > 1)
    assert coprime + non == total


@given(int_sets(max_size=9))
def test_cardinality_filters_sum(A):
    for kind in Kind:
        pred = SubsetPredicate(kind, n=6 if kind is Kind.RELPRIME_TO_N else None)
        by_size = sum(
            brute_count(A, SubsetPredicate(kind, pred.n, alpha)) for alpha in range(1, len(A) + 1)
        )
        assert by_size == brute_count(A, pred)


@given(int_sets(max_size=9))
def test_relprime_to_one_counts_everything(A):
    assert brute_count(A, SubsetPredicate("relprime-to-n", n=1)) == 2 ** len(A) - 1


def test_singletons_are_both_pairwise_and_free():
    A = make_set([6])
    assert brute_count(A, SubsetPredicate("pairwise")) == 1
    assert brute_count(A, SubsetPredicate("coprime-free")) == 1


def test_size_limit(monkeypatch):
    A = make_set(range(1, 22))
    with pytest.raises(EnumerationLimitError):
        brute_count(A, SubsetPredicate("relprime"))
    monkeypatch.setenv("COPRIME_COUNTS_MAX_ENUM", "3")
    with pytest.raises(EnumerationLimitError):
        brute_count(make_set([1, 2, 3, 4]), SubsetPredicate("relprime"))
    assert brute_count(A234, SubsetPredicate("relprime")) == 3


def test_predicate_validation():
    with pytest.raises(DomainError):
        SubsetPredicate("relprime-to-n")
    with pytest.raises(ValueError):
        SubsetPredicate("bogus")
    with pytest.raises(DomainError):
        SubsetPredicate("relprime", cardinality=0)


@given(int_sets(max_size=9), st.integers(0, 30))
def test_profile_matches_brute_count(A, n):
    from coprime_counts.oracle import count_from_profile, gcd_profile

    prof = gcd_profile(A)
    assert sum(prof.values()) == 2 ** len(A) - 1
    kind = "relprime" if n == 0 else "relprime-to-n"
    for alpha in [None, *range(1, len(A) + 1)]:
        pred = SubsetPredicate(kind, n or None, alpha)
        assert count_from_profile(prof, n, alpha) == brute_count(A, pred)
