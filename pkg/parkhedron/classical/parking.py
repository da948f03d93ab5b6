"""
Classical Parking Functions

Zero-based convention: a tuple of length k parks when its sorted values
b_1 <= ... <= b_k satisfy b_i <= i - 1. There are (k+1)^(k-1) of them, and the
nondecreasing ones (Catalan many) index the S_k-orbits.
"""

import logging
from typing import Iterator, Sequence, Tuple

from parkhedron.core.partitions import distinct_permutations, multiplicity_partition
from parkhedron.core.types import PaddedPartition
from parkhedron.errors import DomainError
from parkhedron.symfunc.ring import SymFunc, h_sum

logger = logging.getLogger(__name__)


def is_parking_function(a: Sequence[int]) -> bool:
    """True iff the sorted values satisfy b_i <= i - 1 (0-indexed: b[i] <= i)."""
    return all(0 <= value <= i for i, value in enumerate(sorted(a)))


def _require_length(k: int) -> None:
    if k < 1:
        raise DomainError(f'parking functions need length k >= 1, got {k}')


def enumerate_nondecreasing_pf(k: int) -> Iterator[PaddedPartition]:
    """
    Weakly increasing parking functions of length k, one per S_k-orbit.

    Each is returned sorted decreasingly as a PaddedPartition of length k
    (zeros kept), in the lexicographic order of the increasing sequences.
    """
    _require_length(k)
    prefix = []

    def build(position, low):
        if position == k:
            yield PaddedPartition(tuple(reversed(prefix)))
            return
        # Next value is at least the previous one and at most its index
        for value in range(low, position + 1):
            prefix.append(value)
            yield from build(position + 1, value)
            prefix.pop()

    yield from build(0, 0)


def enumerate_parking_functions(k: int) -> Iterator[Tuple[int, ...]]:
    """Every parking function of length k, orbit by orbit."""
    for rep in enumerate_nondecreasing_pf(k):
        yield from distinct_permutations(rep.parts)


def frobenius_pf(k: int) -> SymFunc:
    """
    Frobenius characteristic of S_k permuting parking functions of length k.

    Returns:
        Sum of h_{mult(b)} over the nondecreasing parking functions b
    """
    return h_sum((multiplicity_partition(rep) for rep in enumerate_nondecreasing_pf(k)), k)
