"""
Parking Space: Points, Shifts and Orbit Indices

C_{m,n} is the set of N = m*n tuples over [0, n-1] whose coordinate sum is
congruent to a residue c modulo n. S_N permutes coordinates; the shift map
adds 1 to every coordinate modulo n and commutes with that action.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional, Sequence

from parkhedron.core.types import LatticePoint, PaddedPartition
from parkhedron.errors import ConsistencyError, DomainError, UnsupportedParameterError

logger = logging.getLogger(__name__)


def default_residue(m: int, n: int) -> int:
    """c_{m,n} = (N - 2)(n - 1) / 2 reduced modulo n."""
    numerator = (m * n - 2) * (n - 1)
    if numerator % 2:
        raise ConsistencyError(f'(N-2)(n-1) = {numerator} is odd for m={m}, n={n}')
    return (numerator // 2) % n


@dataclass(frozen=True)
class CmnSpec:
    """
    Parameters of C_{m,n}.

    Attributes:
        m: Positive integer
        n: Integer >= 2
        residue: Coordinate-sum class modulo n; None selects c_{m,n}
    """

    m: int
    n: int
    residue: Optional[int] = None
    c: int = field(init=False)

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f'm must be >= 1, got {self.m}')
        if self.n < 2:
            raise DomainError(f'n must be >= 2, got {self.n}')
        default = default_residue(self.m, self.n)
        c = default if self.residue is None else self.residue % self.n
        object.__setattr__(self, 'c', c)

    @property
    def N(self) -> int:
        """Number of coordinates, m * n."""
        return self.m * self.n

    @property
    def word_length(self) -> int:
        """Length (m + 1) * n of the words encoding Y_{m,n}."""
        return (self.m + 1) * self.n

    @property
    def is_default(self) -> bool:
        return self.c == default_residue(self.m, self.n)

    def require_default(self, operation: str) -> None:
        """
        Guard for operations proved only for the residue c_{m,n}.

        Raises:
            UnsupportedParameterError: If a different residue was chosen
        """
        if not self.is_default:
            raise UnsupportedParameterError(
                f'{operation} needs the default residue {default_residue(self.m, self.n)} '
                f'for m={self.m}, n={self.n}; got {self.c}'
            )

    def __str__(self) -> str:
        return f'm={self.m}, n={self.n}, c={self.c}'


def enumerate_C(spec: CmnSpec) -> Iterator[LatticePoint]:
    """
    Every point of C_{m,n} in lexicographic order.

    The first N - 1 coordinates run freely; the last one is fixed by the
    residue, so exactly n^(N-1) points come out.
    """
    n, c = spec.n, spec.c
    logger.debug(f'Enumerating C for {spec}')
    for prefix in product(range(n), repeat=spec.N - 1):
        yield prefix + ((c - sum(prefix)) % n,)


def _check_range(x: Sequence[int], n: int) -> None:
    bad = [v for v in x if not 0 <= v < n]
    if bad:
        raise DomainError(f'coordinates must lie in [0, {n - 1}], got {tuple(x)}')


def shift(x: Sequence[int], n: int) -> LatticePoint:
    """
    Add 1 to every coordinate modulo n.

    Raises:
        DomainError: If a coordinate lies outside [0, n-1]
    """
    _check_range(x, n)
    return tuple((v + 1) % n for v in x)


def shift_power(x: Sequence[int], n: int, j: int) -> LatticePoint:
    """shift applied j times (j taken modulo n)."""
    _check_range(x, n)
    return tuple((v + j) % n for v in x)


def enumerate_Y(spec: CmnSpec) -> Iterator[PaddedPartition]:
    """
    Weakly decreasing points of C_{m,n} (the S_N-orbit indices), lexicographically.

    Built directly by backtracking over bounded decreasing tuples instead of
    sorting all of C_{m,n}.
    """
    n, c, length = spec.n, spec.c, spec.N
    prefix = []

    def build(position, cap, running):
        if position == length:
            if running % n == c:
                yield PaddedPartition(tuple(prefix))
            return
        # Lexicographic order on the tuple: smallest leading value first
        for value in range(0, cap + 1):
            prefix.append(value)
            yield from build(position + 1, value, running + value)
            prefix.pop()

    # The first coordinate is the largest; later ones stay below it
    for first in range(0, n):
        prefix.append(first)
        yield from build(1, first, first)
        prefix.pop()
