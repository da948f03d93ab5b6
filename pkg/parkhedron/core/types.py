"""
parkhedron Core Module: Value Types
Immutable partitions, padded partitions, binary words and cycle types.

Every type validates its invariant on construction, so a value that exists
is a value that is well formed. Lattice points are plain integer tuples.
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Tuple

from parkhedron.errors import DomainError

# An N-tuple of integers (elements of C_{m,n}, lattice points of permutahedra)
LatticePoint = Tuple[int, ...]


def _as_int_tuple(values, what):
    try:
        return tuple(int(v) for v in values)
    except (TypeError, ValueError):
        raise DomainError(f'{what} must be a sequence of integers, got {values!r}')


def _compact(parts):
    """Render parts the way tables print them: 2100, or 10,3,0 once a part needs two digits."""
    if all(0 <= p < 10 for p in parts):
        return ''.join(str(p) for p in parts)
    return ','.join(str(p) for p in parts)


class _PartsMixin:
    """Sequence protocol shared by the partition types."""

    parts: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)


# ============================================================================
# Partitions
# ============================================================================

@dataclass(frozen=True)
class Partition(_PartsMixin):
    """A weakly decreasing tuple of positive integers (zero-part-free normal form)."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = _as_int_tuple(self.parts, 'Partition')
        if any(p < 1 for p in parts):
            raise DomainError(f'Partition parts must be positive: {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f'Partition parts must be weakly decreasing: {parts}')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Parse '2,1,1' (or '' for the empty partition)."""
        text = text.strip().strip('()[]')
        if not text:
            return cls(())
        return cls(tuple(int(token) for token in text.split(',')))

    def pad(self, length: int) -> 'PaddedPartition':
        """Append zeros up to the given length."""
        if length < len(self.parts):
            raise DomainError(f'Cannot pad {self} with {len(self.parts)} parts to length {length}')
        return PaddedPartition(self.parts + (0,) * (length - len(self.parts)))

    def __str__(self) -> str:
        return ','.join(str(p) for p in self.parts)


@dataclass(frozen=True)
class PaddedPartition(_PartsMixin):
    """A weakly decreasing tuple of nonnegative integers of fixed length.

    Trailing zeros are significant: (2,1,0,0) and (2,1,0) are different values.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = _as_int_tuple(self.parts, 'PaddedPartition')
        if any(p < 0 for p in parts):
            raise DomainError(f'PaddedPartition parts must be nonnegative: {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f'PaddedPartition parts must be weakly decreasing: {parts}')
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> 'PaddedPartition':
        """Parse '2,1,0,0' or the compact digit form '2100'."""
        text = text.strip().strip('()[]')
        if not text:
            return cls(())
        if ',' in text:
            return cls(tuple(int(token) for token in text.split(',')))
        return cls(tuple(int(ch) for ch in text))

    def strip(self) -> Partition:
        """Drop the zero parts."""
        return Partition(tuple(p for p in self.parts if p > 0))

    def __str__(self) -> str:
        return _compact(self.parts)


# ============================================================================
# Binary words
# ============================================================================

@dataclass(frozen=True)
class BinaryWord:
    """A finite word over the alphabet {0, 1}."""

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = _as_int_tuple(self.letters, 'BinaryWord')
        if any(letter not in (0, 1) for letter in letters):
            raise DomainError(f'BinaryWord letters must be 0 or 1: {letters}')
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def parse(cls, text: str) -> 'BinaryWord':
        """Parse a word written as a string of 0s and 1s."""
        text = text.strip()
        if any(ch not in '01' for ch in text):
            raise DomainError(f'BinaryWord text must contain only 0 and 1: {text!r}')
        return cls._trusted(tuple(int(ch) for ch in text))

    @classmethod
    def _trusted(cls, letters: Tuple[int, ...]) -> 'BinaryWord':
        """Build from letters already known to be a tuple over {0, 1}."""
        word = object.__new__(cls)
        object.__setattr__(word, 'letters', letters)
        return word

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    @property
    def zeros(self) -> int:
        return self.letters.count(0)

    @property
    def ones(self) -> int:
        return self.letters.count(1)

    def __str__(self) -> str:
        return ''.join(str(letter) for letter in self.letters)


# ============================================================================
# Cycle types
# ============================================================================

@dataclass(frozen=True)
class CycleType:
    """The cycle type of a permutation of n: a nonempty partition of n."""

    partition: Partition

    def __post_init__(self):
        partition = self.partition
        if not isinstance(partition, Partition):
            partition = Partition(tuple(sorted(_as_int_tuple(partition, 'CycleType'), reverse=True)))
        if not partition.parts:
            raise DomainError('CycleType must have at least one cycle')
        object.__setattr__(self, 'partition', partition)

    @classmethod
    def parse(cls, text: str) -> 'CycleType':
        """Parse '2,1,1'; parts may be given in any order."""
        try:
            values = [int(token) for token in text.replace(' ', '').split(',') if token]
        except ValueError:
            raise DomainError(f'Cycle type must be comma-separated integers: {text!r}')
        return cls(Partition(tuple(sorted(values, reverse=True))))

    @property
    def parts(self) -> Tuple[int, ...]:
        return self.partition.parts

    @property
    def n(self) -> int:
        """Size of the permuted set."""
        return self.partition.size

    @property
    def length(self) -> int:
        """Number of cycles."""
        return len(self.partition.parts)

    @property
    def d(self) -> int:
        """GCD of the cycle lengths."""
        return gcd(*self.partition.parts)

    def blocks(self):
        """Cycles of the canonical permutation: consecutive index ranges."""
        start = 0
        for part in self.partition.parts:
            yield range(start, start + part)
            start += part

    def permutation(self) -> Tuple[int, ...]:
        """A concrete permutation (0-indexed images) with this cycle type."""
        images = []
        for block in self.blocks():
            images.extend(list(block[1:]) + [block[0]])
        return tuple(images)

    def __str__(self) -> str:
        return str(self.partition)
