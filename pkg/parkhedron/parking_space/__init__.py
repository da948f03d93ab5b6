"""
parkhedron Parking Space Package
C_{m,n}, its shift quotient, the word set B_{m,n} and the Lyndon transversal.
"""

from parkhedron.parking_space.space import (
    CmnSpec,
    default_residue,
    enumerate_C,
    shift,
    shift_power,
    enumerate_Y,
)

from parkhedron.parking_space.words import (
    weight,
    partition_to_word,
    word_to_partition,
    check_membership,
    is_in_B,
    enumerate_B,
    enumerate_B_lyndon,
    word_to_subset,
    count_subsets_bruteforce,
)

from parkhedron.parking_space.counting import (
    count_C,
    count_classes,
    count_Y_formula,
    count_lyndon_formula,
)

from parkhedron.parking_space.orbits import (
    ShiftColumn,
    shift_column,
    shift_orbit_sorted,
    shift_via_rotation,
    shifted_size,
    lyndon_partitions,
    shift_columns,
    uniform_size_sizes,
    uniform_size_transversals,
    frobenius_tau_hat,
    class_representatives,
    parking_representative,
    orbit_fixed_points,
    fixed_points_direct,
)

__all__ = [
    'CmnSpec',
    'default_residue',
    'enumerate_C',
    'shift',
    'shift_power',
    'enumerate_Y',
    'weight',
    'partition_to_word',
    'word_to_partition',
    'check_membership',
    'is_in_B',
    'enumerate_B',
    'enumerate_B_lyndon',
    'word_to_subset',
    'count_subsets_bruteforce',
    'count_C',
    'count_classes',
    'count_Y_formula',
    'count_lyndon_formula',
    'ShiftColumn',
    'shift_column',
    'shift_orbit_sorted',
    'shift_via_rotation',
    'shifted_size',
    'lyndon_partitions',
    'shift_columns',
    'uniform_size_sizes',
    'uniform_size_transversals',
    'frobenius_tau_hat',
    'class_representatives',
    'parking_representative',
    'orbit_fixed_points',
    'fixed_points_direct',
]
