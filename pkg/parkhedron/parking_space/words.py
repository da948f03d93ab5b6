"""
Parking Space: Word Encoding

A partition lam in Y_{m,n} is encoded by the word w_lam of length (m+1)n
whose 1s sit at positions n - lam_i + i (1-indexed). The image is B_{m,n}:
m-balanced words starting with 0 whose weight is -1 modulo n.
"""

import logging
from itertools import combinations
from typing import Iterator, Sequence, Set

from parkhedron.core.types import BinaryWord, PaddedPartition
from parkhedron.core.words import enumerate_lyndon_fixed_content
from parkhedron.errors import DomainError
from parkhedron.parking_space.space import CmnSpec

logger = logging.getLogger(__name__)


def weight(w: BinaryWord) -> int:
    """Sum of the 1-indexed positions carrying a 1."""
    return sum(i for i, letter in enumerate(w.letters, start=1) if letter == 1)


def one_positions(w: BinaryWord):
    """1-indexed positions of the 1s, increasing."""
    return [i for i, letter in enumerate(w.letters, start=1) if letter == 1]


def zero_positions(w: BinaryWord):
    """1-indexed positions of the 0s, increasing."""
    return [i for i, letter in enumerate(w.letters, start=1) if letter == 0]


def partition_to_word(lam: Sequence[int], spec: CmnSpec) -> BinaryWord:
    """
    Encode lam as w_lam.

    Args:
        lam: Padded partition of length N with entries at most n - 1
        spec: Parameters (m, n)

    Returns:
        Word of length (m+1)n with 1s exactly at positions n - lam_i + i

    Raises:
        UnsupportedParameterError: For a non-default residue
        DomainError: If lam has the wrong length or an entry above n - 1
    """
    spec.require_default('partition_to_word')
    lam = lam if isinstance(lam, PaddedPartition) else PaddedPartition(tuple(lam))
    n, length = spec.n, spec.word_length
    if len(lam) != spec.N:
        raise DomainError(f'partition {lam} must have length N={spec.N}')
    if lam.parts and lam[0] > n - 1:
        raise DomainError(f'partition {lam} has an entry above n-1={n - 1}')
    letters = [0] * length
    for i, part in enumerate(lam.parts, start=1):
        letters[n - part + i - 1] = 1
    return BinaryWord._trusted(tuple(letters))


def decode_word(w: BinaryWord, n: int) -> PaddedPartition:
    """Inverse encoding lam_i = n + i - p_i, without membership checks."""
    return PaddedPartition(tuple(n + i - p for i, p in enumerate(one_positions(w), start=1)))


def word_to_partition(w: BinaryWord, spec: CmnSpec) -> PaddedPartition:
    """
    Decode a word of B_{m,n} back to its partition.

    Raises:
        UnsupportedParameterError: For a non-default residue
        DomainError: Naming the first violated membership condition
    """
    spec.require_default('word_to_partition')
    check_membership(w, spec)
    return decode_word(w, spec.n)


def check_membership(w: BinaryWord, spec: CmnSpec) -> None:
    """
    Raise DomainError unless w lies in B_{m,n}.

    Conditions are checked in order: length, m-balance, first letter, weight.
    """
    n, m = spec.n, spec.m
    if len(w) != spec.word_length:
        raise DomainError(f'word {w} must have length (m+1)n={spec.word_length}')
    if w.ones != m * w.zeros:
        raise DomainError(f'word {w} is not {m}-balanced ({w.zeros} zeros, {w.ones} ones)')
    if w[0] != 0:
        raise DomainError(f'word {w} must start with 0')
    if weight(w) % n != n - 1:
        raise DomainError(f'word {w} has weight {weight(w)}, not -1 modulo {n}')


def is_in_B(w: BinaryWord, spec: CmnSpec) -> bool:
    try:
        check_membership(w, spec)
    except DomainError:
        return False
    return True


def enumerate_B(spec: CmnSpec) -> Iterator[BinaryWord]:
    """
    Every word of B_{m,n} in lexicographic order.

    Raises:
        UnsupportedParameterError: For a non-default residue
    """
    spec.require_default('enumerate_B')
    n, length = spec.n, spec.word_length
    total = length * (length + 1) // 2
    logger.debug(f'Enumerating B for {spec}')
    # Position 1 is always a 0; choose the other n - 1 zero positions
    for rest in combinations(range(2, length + 1), n - 1):
        if (total - 1 - sum(rest)) % n != n - 1:
            continue
        letters = [1] * length
        letters[0] = 0
        for position in rest:
            letters[position - 1] = 0
        yield BinaryWord._trusted(tuple(letters))


def enumerate_B_lyndon(spec: CmnSpec) -> Iterator[BinaryWord]:
    """
    The Lyndon words of B_{m,n}, in lexicographic order.

    Generated from fixed-content Lyndon words (n zeros, mn ones) filtered by
    weight; a Lyndon word with a 0 in it starts with 0.

    Raises:
        UnsupportedParameterError: For a non-default residue
    """
    spec.require_default('enumerate_B_lyndon')
    n = spec.n
    for w in enumerate_lyndon_fixed_content(n, spec.N):
        if weight(w) % n == n - 1:
            yield w


def word_to_subset(w: BinaryWord) -> Set[int]:
    """S_w = {j - 1 : w_j = 1}, the subset view of a word starting with 0."""
    return {p - 1 for p in one_positions(w)}


def count_subsets_bruteforce(spec: CmnSpec) -> int:
    """Number of N-subsets of {1, ..., (m+1)n - 1} whose sum is -1 modulo n."""
    spec.require_default('count_subsets_bruteforce')
    n = spec.n
    return sum(
        1 for subset in combinations(range(1, spec.word_length), spec.N)
        if sum(subset) % n == n - 1
    )
