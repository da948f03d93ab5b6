"""
parkhedron Core Module: Partition Algorithms
Sorting, dominance order, multiplicities, orbit sizes and bounded enumeration.
"""

from collections import Counter
from itertools import accumulate
from math import factorial, prod
from typing import Iterator, Optional, Sequence

from sympy.utilities.iterables import multiset_permutations

from parkhedron.core.types import LatticePoint, PaddedPartition, Partition
from parkhedron.errors import DomainError


def sort_desc(x: Sequence[int]) -> PaddedPartition:
    """
    Sort the coordinates of a point into a padded partition.

    Args:
        x: Sequence of nonnegative integers

    Returns:
        The coordinates in weakly decreasing order, same length
    """
    return PaddedPartition(tuple(sorted(x, reverse=True)))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """
    Dominance order: is mu dominated by lam?

    Args:
        lam: Padded partition
        mu: Padded partition of the same length and size

    Returns:
        True iff every prefix sum of mu is at most the matching prefix sum of lam

    Raises:
        DomainError: On a length or size mismatch
    """
    if len(lam) != len(mu):
        raise DomainError(f'dominance needs equal lengths: {len(lam)} vs {len(mu)}')
    if sum(lam) != sum(mu):
        raise DomainError(f'dominance needs equal sizes: {sum(lam)} vs {sum(mu)}')
    return all(m <= l for m, l in zip(accumulate(mu), accumulate(lam)))


def multiplicity_partition(lam: Sequence[int]) -> Partition:
    """Multiplicities of the distinct values of lam (zeros included), sorted decreasingly."""
    return Partition(tuple(sorted(Counter(lam).values(), reverse=True)))


def orbit_size(lam: Sequence[int]) -> int:
    """Size of the S_N-orbit of lam: N! / prod(multiplicity!)."""
    return factorial(len(lam)) // prod(factorial(c) for c in Counter(lam).values())


def distinct_permutations(lam: Sequence[int]) -> Iterator[LatticePoint]:
    """Every distinct rearrangement of lam, in lexicographic order."""
    for perm in multiset_permutations(list(lam)):
        yield tuple(perm)


def partitions(k: int, max_part: Optional[int] = None,
               max_length: Optional[int] = None) -> Iterator[Partition]:
    """
    Enumerate partitions of k in reverse-lexicographic order.

    Args:
        k: Size (k >= 0; k = 0 yields the empty partition)
        max_part: Optional bound on every part
        max_length: Optional bound on the number of parts

    Yields:
        Partition values
    """
    if k < 0:
        raise DomainError(f'cannot partition a negative integer: {k}')
    bound = k if max_part is None else min(max_part, k)
    prefix = []

    def build(remaining, cap):
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        if max_length is not None and len(prefix) == max_length:
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from build(remaining - part, part)
            prefix.pop()

    yield from build(k, bound)


def dominated_by(lam: Sequence[int]) -> Iterator[PaddedPartition]:
    """
    Enumerate every padded partition of the same length and size dominated by lam.

    Backtracks over weakly decreasing tuples whose running prefix sums stay
    under those of lam. Output is reverse-lexicographic, so lam comes first.

    Args:
        lam: Padded partition (weakly decreasing, nonnegative)

    Yields:
        PaddedPartition values
    """
    lam = PaddedPartition(tuple(lam))
    length = len(lam)
    total = lam.size
    caps = list(accumulate(lam))
    prefix = []

    def build(position, cap, running):
        if position == length:
            if running == total:
                yield PaddedPartition(tuple(prefix))
            return
        remaining = total - running
        slots = length - position
        # Later parts are at most this one, so it is at least their average
        low = -(-remaining // slots)
        high = min(cap, caps[position] - running)
        for value in range(high, low - 1, -1):
            prefix.append(value)
            yield from build(position + 1, value, running + value)
            prefix.pop()

    if length == 0:
        yield lam
        return
    yield from build(0, lam[0], 0)
