"""
Parking Space: Shift Orbits, Representatives and Frobenius Characteristic

Every shift class of C_{m,n} meets Y_{m,n} in exactly n sorted points, and
the Lyndon words of B_{m,n} pick one sorted point per class. Their S_N-orbits
form a transversal of the shift quotient, so the quotient representation
is a sum of h-functions indexed by runs of 1s.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from parkhedron.classical.parking import is_parking_function
from parkhedron.core.partitions import distinct_permutations, sort_desc
from parkhedron.core.types import BinaryWord, CycleType, LatticePoint, PaddedPartition
from parkhedron.core.words import rotate, runs_of_ones
from parkhedron.errors import ConsistencyError, DomainError, UnsupportedParameterError
from parkhedron.parking_space.space import CmnSpec, shift_power
from parkhedron.parking_space.words import (
    decode_word,
    enumerate_B_lyndon,
    one_positions,
    partition_to_word,
    word_to_partition,
    zero_positions,
)
from parkhedron.symfunc.ring import SymFunc, h_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftColumn:
    """A Lyndon word with the sorted shifts of its partition, in shift order."""

    word: BinaryWord
    entries: Tuple[PaddedPartition, ...]

    @property
    def head(self) -> PaddedPartition:
        return self.entries[0]


# ============================================================================
# Shift orbits of sorted points
# ============================================================================

def shift_column(lam: Sequence[int], spec: CmnSpec) -> List[PaddedPartition]:
    """(sort . shift^j)(lam) for j = 0, ..., n-1, in j order."""
    return [sort_desc(shift_power(lam, spec.n, j)) for j in range(spec.n)]


def shift_orbit_sorted(lam: Sequence[int], spec: CmnSpec) -> FrozenSet[PaddedPartition]:
    """The set {sort(shift^j(lam)) : 0 <= j < n}; it always has n elements."""
    return frozenset(shift_column(lam, spec))


def shift_via_rotation(lam: Sequence[int], spec: CmnSpec, j: int) -> PaddedPartition:
    """
    Compute sort(shift^j(lam)) by rotating w_lam.

    With a_0 < ... < a_{n-1} the 1-indexed positions of the 0s in w_lam,
    the word rot^(a_j - 1)(w_lam) encodes sort(shift^j(lam)).

    Raises:
        DomainError: If j is outside [0, n-1]
    """
    if not 0 <= j < spec.n:
        raise DomainError(f'shift index must lie in [0, {spec.n - 1}], got {j}')
    w = partition_to_word(lam, spec)
    a_j = zero_positions(w)[j]
    return decode_word(rotate(w, a_j - 1), spec.n)


def shifted_size(lam: Sequence[int], spec: CmnSpec, j: int) -> int:
    """
    |sort(shift^j(lam))| predicted from the word: |lam| + (m*j - i)n, where i
    counts the 1s of w_lam before its j-th 0 (0-indexed).

    The i coordinates with lam_k >= n - j wrap around to a smaller value;
    each of the N coordinates gains j and each wrap loses n.
    """
    w = partition_to_word(lam, spec)
    a_j = zero_positions(w)[j]
    ones_before = sum(1 for p in one_positions(w) if p < a_j)
    return sum(lam) + (spec.m * j - ones_before) * spec.n


def lyndon_partitions(spec: CmnSpec) -> List[Tuple[BinaryWord, PaddedPartition]]:
    """(w, lam_w) for every Lyndon word of B_{m,n}."""
    return [(w, word_to_partition(w, spec)) for w in enumerate_B_lyndon(spec)]


def shift_columns(spec: CmnSpec) -> List[ShiftColumn]:
    """One shift column per Lyndon word; together they tile Y_{m,n}."""
    return [
        ShiftColumn(word=w, entries=tuple(shift_column(lam, spec)))
        for w, lam in lyndon_partitions(spec)
    ]


def uniform_size_sizes(spec: CmnSpec) -> Dict[int, int]:
    """Map each size shared by every column to the number of transversals of that size."""
    columns = shift_columns(spec)
    counts = [Counter(lam.size for lam in column.entries) for column in columns]
    if not counts:
        return {}
    common = set(counts[0])
    for counter in counts[1:]:
        common &= set(counter)
    result = {}
    for size in sorted(common):
        total = 1
        for counter in counts:
            total *= counter[size]
        result[size] = total
    return result


def uniform_size_transversals(spec: CmnSpec) -> Iterator[Tuple[PaddedPartition, ...]]:
    """
    Every choice of one partition per shift column with all sizes equal.

    Yields:
        Tuples ordered by column, grouped by increasing size
    """
    columns = shift_columns(spec)
    for size in uniform_size_sizes(spec):
        choices = [[lam for lam in column.entries if lam.size == size] for column in columns]
        yield from product(*choices)


# ============================================================================
# Representatives and characters
# ============================================================================

def frobenius_tau_hat(spec: CmnSpec) -> SymFunc:
    """
    Frobenius characteristic of S_N acting on the shift classes of C_{m,n}.

    Returns:
        Sum of h_{runs of 1s in w} over the Lyndon words w of B_{m,n}

    Raises:
        UnsupportedParameterError: For a non-default residue
    """
    return h_sum((runs_of_ones(w) for w in enumerate_B_lyndon(spec)), spec.N)


def class_representatives(spec: CmnSpec) -> Iterator[LatticePoint]:
    """
    One point per shift class of C_{m,n}: the S_N-orbits of the Lyndon partitions.

    Raises:
        UnsupportedParameterError: For a non-default residue
    """
    for w, lam in lyndon_partitions(spec):
        logger.debug(f'Expanding orbit of {lam} (word {w})')
        yield from distinct_permutations(lam.parts)


def parking_representative(x: Sequence[int], spec: CmnSpec) -> LatticePoint:
    """
    The member of the shift class of x whose first n-1 coordinates park.

    Args:
        x: Point of C_{1,n} (any residue)
        spec: Parameters with m = 1

    Returns:
        shift^j(x) for the unique j making x_1..x_{n-1} a parking function

    Raises:
        UnsupportedParameterError: If m > 1
        DomainError: If x has the wrong length, range or residue
        ConsistencyError: If not exactly one shift parks
    """
    if spec.m != 1:
        raise UnsupportedParameterError(f'parking representatives need m = 1, got m = {spec.m}')
    n = spec.n
    if len(x) != n:
        raise DomainError(f'point {tuple(x)} must have length {n}')
    if sum(x) % n != spec.c:
        raise DomainError(f'point {tuple(x)} has coordinate sum {sum(x)}, not {spec.c} modulo {n}')
    hits = [y for y in (shift_power(x, n, j) for j in range(n)) if is_parking_function(y[:-1])]
    if len(hits) != 1:
        raise ConsistencyError(f'{len(hits)} shifts of {tuple(x)} park, expected exactly one')
    return hits[0]


def orbit_fixed_points(lam: Sequence[int], mu) -> int:
    """
    Points of the S_N-orbit of lam fixed by a permutation of cycle type mu.

    A fixed point is constant on cycles, so this counts the ways to give each
    cycle a value such that every value v covers exactly mult(v) coordinates.

    Raises:
        DomainError: If |mu| differs from the length of lam
    """
    mu = mu if isinstance(mu, CycleType) else CycleType(mu)
    if mu.n != len(lam):
        raise DomainError(f'cycle type {mu} does not act on {len(lam)} coordinates')
    multiplicities = tuple(Counter(lam).values())
    cycles = mu.parts

    @lru_cache(maxsize=None)
    def ways(index: int, remaining: Tuple[int, ...]) -> int:
        if index == len(cycles):
            return 1 if not any(remaining) else 0
        length = cycles[index]
        total = 0
        for slot, room in enumerate(remaining):
            if room >= length:
                rest = remaining[:slot] + (room - length,) + remaining[slot + 1:]
                total += ways(index + 1, rest)
        return total

    return ways(0, multiplicities)


def fixed_points_direct(points: Iterable[Sequence[int]], mu) -> int:
    """Number of the given points fixed by the canonical permutation of cycle type mu."""
    mu = mu if isinstance(mu, CycleType) else CycleType(mu)
    images = mu.permutation()
    count = 0
    for x in points:
        if len(x) != len(images):
            raise DomainError(f'point {tuple(x)} does not have {len(images)} coordinates')
        if all(x[images[i]] == x[i] for i in range(len(images))):
            count += 1
    return count
