#!/usr/bin/env python
"""Test script for permutahedra.

Lattice points by dominance, the trimmed standard permutahedron, the
representation on Lat(P_{delta_n}), fixed points and Ehrhart data.
"""

import sys
import unittest
from fractions import Fraction

import pytest
from sympy import Poly
from sympy.abc import t

from parkhedron.classical import frobenius_pf
from parkhedron.core import PaddedPartition, multiplicity_partition, partitions, runs_of_ones
from parkhedron.errors import DegeneratePolytopeError, DomainError
from parkhedron.parking_space import CmnSpec, enumerate_B_lyndon, frobenius_tau_hat, shift_column, shift_columns
from parkhedron.permutahedron import (
    PermutahedronSpec,
    delta,
    delta_size,
    dominated_representative,
    ehrhart_counts,
    ehrhart_polynomial,
    fixed_point_count,
    fixed_point_formula,
    formula_factor,
    frobenius_gamma,
    frobenius_gamma_restricted,
    is_dominated_by_delta,
    is_lattice_point,
    lattice_point_count,
    lattice_points,
    normalized_volume,
    orbit_reps,
    restricted_orbit_reps,
    standard,
    trimmed,
    trimmed_to_delta,
)
from parkhedron.symfunc import character, parse, restrict, restrict_via_power_sums


def _pp(text):
    return PaddedPartition.parse(text)


class TestVertices(unittest.TestCase):
    """Named vertices and PermutahedronSpec."""

    def test_named_vertices(self):
        self.assertEqual(delta(4), _pp('2100'))
        self.assertEqual(delta(2), _pp('00'))
        self.assertEqual(standard(3), _pp('210'))
        self.assertEqual(trimmed(4), _pp('2210'))
        self.assertEqual(delta_size(4), 3)
        with self.assertRaises(DomainError):
            delta(1)

    def test_spec(self):
        spec = PermutahedronSpec((0, 1, 2))
        self.assertEqual(spec.lam, _pp('210'))
        self.assertEqual(spec.n, 3)
        self.assertFalse(spec.is_constant)
        self.assertTrue(PermutahedronSpec((1, 1)).is_constant)
        self.assertEqual(spec.dilate(2).lam, _pp('420'))
        self.assertEqual(str(spec), 'P(210)')
        with self.assertRaises(DomainError):
            spec.dilate(-1)
        with self.assertRaises(DomainError):
            PermutahedronSpec(())


# ============================================================================
# Lattice points
# ============================================================================

def test_lattice_membership():
    spec = PermutahedronSpec(delta(4))
    assert is_lattice_point((0, 1, 2, 0), spec)
    assert is_lattice_point((1, 0, 1, 1), spec)
    assert not is_lattice_point((3, 0, 0, 0), spec)
    assert not is_lattice_point((2, 2, -1, 0), spec)
    assert not is_lattice_point((1, 1, 1, 1), spec)
    with pytest.raises(DomainError):
        is_lattice_point((1, 1, 1), spec)
    print("✅ Lattice membership by dominance")


def test_orbit_reps_delta_4():
    assert list(orbit_reps(PermutahedronSpec(delta(4)))) == [_pp('2100'), _pp('1110')]


@pytest.mark.parametrize('n', range(2, 9))
def test_lattice_count_is_tree_count(n):
    assert lattice_point_count(PermutahedronSpec(delta(n))) == n ** (n - 2)


@pytest.mark.parametrize('n', range(2, 6))
def test_lattice_points_are_distinct_members(n):
    spec = PermutahedronSpec(delta(n))
    points = list(lattice_points(spec))
    assert len(points) == len(set(points)) == n ** (n - 2)
    assert all(is_lattice_point(x, spec) for x in points)


@pytest.mark.parametrize('n', range(2, 6))
def test_trimmed_bijection(n):
    trimmed_points = set(lattice_points(PermutahedronSpec(trimmed(n))))
    delta_points = set(lattice_points(PermutahedronSpec(delta(n))))
    assert {trimmed_to_delta(x, n) for x in trimmed_points} == delta_points
    assert all(trimmed_to_delta(trimmed_to_delta(x, n), n) == x for x in trimmed_points)
    with pytest.raises(DomainError):
        trimmed_to_delta((0,) * (n + 1), n)


# ============================================================================
# The representation gamma_n
# ============================================================================

def test_frobenius_gamma_examples():
    assert frobenius_gamma(2) == parse('h[2]')
    assert frobenius_gamma(3) == parse('h[2,1]')
    assert frobenius_gamma(4) == parse('h[2,1,1] + h[3,1]')
    print("✅ Frobenius characteristics of gamma_n")


@pytest.mark.parametrize('n', range(2, 10))
def test_mult_equals_runs(n):
    mults = sorted(multiplicity_partition(lam).parts for lam in orbit_reps(PermutahedronSpec(delta(n))))
    runs = sorted(runs_of_ones(w).parts for w in enumerate_B_lyndon(CmnSpec(1, n)))
    assert mults == runs


@pytest.mark.parametrize('n', range(2, 8))
def test_gamma_equals_tau_hat(n):
    assert frobenius_gamma(n) == frobenius_tau_hat(CmnSpec(1, n))


@pytest.mark.parametrize('n', range(2, 10))
def test_restriction_is_parking_functions(n):
    expected = frobenius_pf(n - 1)
    gamma = frobenius_gamma(n)
    assert restrict(gamma) == expected
    assert restrict_via_power_sums(gamma) == expected
    assert frobenius_gamma_restricted(n) == expected


def test_restricted_orbit_reps_4():
    reps = [(str(rest), last) for rest, last in restricted_orbit_reps(4)]
    assert reps == [('100', 2), ('200', 1), ('210', 0), ('110', 1), ('111', 0)]
    assert frobenius_gamma_restricted(4) == parse('h[3] + 3 h[2,1] + h[1,1,1]')
    with pytest.raises(DomainError):
        frobenius_gamma_restricted(1)


# ============================================================================
# Dominated representatives of shift columns
# ============================================================================

@pytest.mark.parametrize('n', range(2, 9))
def test_one_dominated_member_per_column(n):
    for column in shift_columns(CmnSpec(1, n)):
        hits = [lam for lam in column.entries if is_dominated_by_delta(lam, n)]
        assert len(hits) == 1
        assert dominated_representative(column.entries[-1], n) == hits[0]


def test_sort_shift_leaves_dominated_set():
    lam = PaddedPartition((7, 5, 5, 5, 4, 4, 2, 2, 2, 0))
    shifted = shift_column(lam, CmnSpec(1, 10))[6]
    assert shifted == PaddedPartition((8, 8, 8, 6, 3, 1, 1, 1, 0, 0))
    assert is_dominated_by_delta(lam, 10)
    assert not is_dominated_by_delta(shifted, 10)
    assert dominated_representative(shifted, 10) == lam
    print("✅ sort.shift^6 example for n = 10")


def test_is_dominated_by_delta_shape_checks():
    assert not is_dominated_by_delta((2, 1, 0), 4)
    assert not is_dominated_by_delta((2, 2, 0, 0), 4)
    assert is_dominated_by_delta((0, 1, 1, 1), 4)


# ============================================================================
# Fixed points
# ============================================================================

def test_formula_factor():
    assert formula_factor(5, 1) == 1
    assert formula_factor(6, 2) == 2
    assert formula_factor(4, 2) == 0
    assert formula_factor(6, 3) == 0


def test_fixed_point_examples():
    assert fixed_point_count(4, [2, 1, 1]) == 4
    assert fixed_point_count(4, [4]) == 0
    assert fixed_point_count(6, [2, 2, 2]) == 12
    assert fixed_point_formula(6, [2, 2, 2]) == 12
    assert fixed_point_formula(4, [4]) == 0
    assert fixed_point_formula(5, [1] * 5) == 125
    with pytest.raises(DomainError):
        fixed_point_count(4, [2, 1])
    with pytest.raises(DomainError):
        fixed_point_formula(4, [3, 2])
    print("✅ Fixed points, including the n = 2 (mod 4) branch")


@pytest.mark.parametrize('n', range(2, 9))
def test_fixed_points_three_ways(n):
    gamma = frobenius_gamma(n)
    for mu in partitions(n):
        counted = fixed_point_count(n, mu)
        assert counted == fixed_point_formula(n, mu)
        assert counted == character(gamma, mu)


# ============================================================================
# Ehrhart data
# ============================================================================

def test_ehrhart_standard_3():
    spec = PermutahedronSpec(standard(3))
    assert ehrhart_counts(spec, 2) == [1, 7, 19]
    assert ehrhart_polynomial(spec) == Poly(3 * t ** 2 + 3 * t + 1, t, domain='QQ')
    assert normalized_volume(spec) == 3
    print("✅ Ehrhart data of the hexagon")


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_volume_of_standard_permutahedron(n):
    assert normalized_volume(PermutahedronSpec(standard(n))) == n ** (n - 2)


def test_volume_of_simplex_is_fractional():
    simplex = PermutahedronSpec((1, 0, 0))
    assert ehrhart_counts(simplex, 3) == [1, 3, 6, 10]
    assert ehrhart_polynomial(simplex) == Poly((t + 1) * (t + 2) / 2, t, domain='QQ')
    assert normalized_volume(simplex) == Fraction(1, 2)
    assert ehrhart_counts(PermutahedronSpec((1, 1, 0, 0)), 2) == [1, 6, 19]
    assert normalized_volume(PermutahedronSpec((1, 1, 0, 0))) == Fraction(2, 3)
    print("✅ Thin vertices give proper fractions")


def test_ehrhart_edge_cases():
    point = PermutahedronSpec((1, 1, 1))
    assert ehrhart_counts(point, 3) == [1, 1, 1, 1]
    assert ehrhart_polynomial(point) == Poly(1, t, domain='QQ')
    with pytest.raises(DegeneratePolytopeError):
        normalized_volume(point)
    with pytest.raises(DomainError):
        ehrhart_counts(point, -1)


def main():
    """Run all tests."""
    print("=" * 50)
    print("PARKHEDRON PERMUTAHEDRON TEST SUITE")
    print("=" * 50)
    return pytest.main([__file__, '-q'])


if __name__ == '__main__':
    sys.exit(main())
