#!/usr/bin/env python
"""Test script for classical parking functions."""

import sys
from itertools import product

import pytest

from parkhedron.classical import (
    enumerate_nondecreasing_pf,
    enumerate_parking_functions,
    frobenius_pf,
    is_parking_function,
)
from parkhedron.core import catalan, partitions
from parkhedron.errors import DomainError
from parkhedron.parking_space import fixed_points_direct
from parkhedron.symfunc import character, parse


def test_is_parking_function():
    print("\n=== Testing Parking Predicate ===")
    assert is_parking_function((0, 0, 1))
    assert is_parking_function((2, 0, 1))
    assert is_parking_function(())
    assert not is_parking_function((1, 1))
    assert not is_parking_function((0, 2, 2))
    assert not is_parking_function((0, -1))
    print("✅ Zero-based parking predicate")


def test_nondecreasing_representatives():
    reps = [str(lam) for lam in enumerate_nondecreasing_pf(3)]
    assert reps == ['000', '100', '200', '110', '210']
    with pytest.raises(DomainError):
        list(enumerate_nondecreasing_pf(0))
    print("✅ Catalan-many orbit representatives")


@pytest.mark.parametrize('k', range(1, 7))
def test_counts(k):
    pfs = list(enumerate_parking_functions(k))
    assert len(pfs) == len(set(pfs)) == (k + 1) ** (k - 1)
    assert sum(1 for _ in enumerate_nondecreasing_pf(k)) == catalan(k)
    assert all(is_parking_function(a) for a in pfs)


@pytest.mark.parametrize('k', range(1, 6))
def test_enumeration_matches_brute_force(k):
    brute = {a for a in product(range(k), repeat=k) if is_parking_function(a)}
    assert brute == set(enumerate_parking_functions(k))


def test_frobenius_pf_examples():
    assert frobenius_pf(1) == parse('h[1]')
    assert frobenius_pf(2) == parse('h[2] + h[1,1]')
    assert frobenius_pf(3) == parse('h[3] + 3 h[2,1] + h[1,1,1]')
    print("✅ Frobenius characteristics of parking functions")


@pytest.mark.parametrize('k', range(1, 6))
def test_characters_count_fixed_parking_functions(k):
    pf = frobenius_pf(k)
    pfs = list(enumerate_parking_functions(k))
    for mu in partitions(k):
        assert character(pf, mu) == fixed_points_direct(pfs, mu)
    assert character(pf, [1] * k) == (k + 1) ** (k - 1)


def main():
    """Run all tests."""
    print("=" * 50)
    print("PARKHEDRON PARKING FUNCTION TEST SUITE")
    print("=" * 50)
    return pytest.main([__file__, '-q'])


if __name__ == '__main__':
    sys.exit(main())
