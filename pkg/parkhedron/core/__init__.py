"""
parkhedron Core Package
Value types and algorithms shared by every other module.
"""

from parkhedron.core.types import (
    LatticePoint,
    Partition,
    PaddedPartition,
    BinaryWord,
    CycleType,
)

from parkhedron.core.partitions import (
    sort_desc,
    dominates,
    multiplicity_partition,
    orbit_size,
    distinct_permutations,
    partitions,
    dominated_by,
)

from parkhedron.core.words import (
    rotate,
    is_primitive,
    least_rotation,
    least_rotation_naive,
    is_lyndon,
    runs_of_ones,
    enumerate_lyndon_fixed_content,
    lyndon_words_bruteforce,
)

from parkhedron.core.numbers import (
    mobius,
    divisors,
    gcd_all,
    catalan,
)

__all__ = [
    # Types
    'LatticePoint',
    'Partition',
    'PaddedPartition',
    'BinaryWord',
    'CycleType',
    # Partitions
    'sort_desc',
    'dominates',
    'multiplicity_partition',
    'orbit_size',
    'distinct_permutations',
    'partitions',
    'dominated_by',
    # Words
    'rotate',
    'is_primitive',
    'least_rotation',
    'least_rotation_naive',
    'is_lyndon',
    'runs_of_ones',
    'enumerate_lyndon_fixed_content',
    'lyndon_words_bruteforce',
    # Numbers
    'mobius',
    'divisors',
    'gcd_all',
    'catalan',
]
