"""
parkhedron Classical Parking Package
Parking functions as an independent oracle for restriction identities.
"""

from parkhedron.classical.parking import (
    is_parking_function,
    enumerate_nondecreasing_pf,
    enumerate_parking_functions,
    frobenius_pf,
)

__all__ = [
    'is_parking_function',
    'enumerate_nondecreasing_pf',
    'enumerate_parking_functions',
    'frobenius_pf',
]
