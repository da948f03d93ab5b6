"""
parkhedron Permutahedron Package
Lattice points of permutahedra, the representation gamma_n, fixed points
and Ehrhart interpolation.
"""

from parkhedron.permutahedron.polytope import (
    PermutahedronSpec,
    delta,
    standard,
    trimmed,
    delta_size,
    is_lattice_point,
    orbit_reps,
    lattice_points,
    lattice_point_count,
    trimmed_to_delta,
    restricted_orbit_reps,
    is_dominated_by_delta,
    dominated_representative,
)

from parkhedron.permutahedron.representation import (
    frobenius_gamma,
    frobenius_gamma_restricted,
    fixed_point_count,
    formula_factor,
    fixed_point_formula,
)

from parkhedron.permutahedron.ehrhart import (
    ehrhart_counts,
    ehrhart_polynomial,
    normalized_volume,
)

__all__ = [
    'PermutahedronSpec',
    'delta',
    'standard',
    'trimmed',
    'delta_size',
    'is_lattice_point',
    'orbit_reps',
    'lattice_points',
    'lattice_point_count',
    'trimmed_to_delta',
    'restricted_orbit_reps',
    'is_dominated_by_delta',
    'dominated_representative',
    'frobenius_gamma',
    'frobenius_gamma_restricted',
    'fixed_point_count',
    'formula_factor',
    'fixed_point_formula',
    'ehrhart_counts',
    'ehrhart_polynomial',
    'normalized_volume',
]
