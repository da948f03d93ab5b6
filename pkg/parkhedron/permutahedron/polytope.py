"""
Permutahedron: Lattice Points via Dominance

P_lam is the convex hull of all rearrangements of lam. An integer point x lies
in P_lam exactly when sum(x) = |lam| and sort(x) is dominated by lam, so
lattice points are orbits of dominated partitions.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Sequence, Tuple

from parkhedron.core.partitions import (
    distinct_permutations,
    dominated_by,
    dominates,
    orbit_size,
    sort_desc,
)
from parkhedron.core.types import LatticePoint, PaddedPartition
from parkhedron.errors import ConsistencyError, DomainError
from parkhedron.parking_space.orbits import shift_column
from parkhedron.parking_space.space import CmnSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermutahedronSpec:
    """The permutahedron generated by a sorted vertex lam."""

    lam: PaddedPartition

    def __post_init__(self):
        lam = self.lam
        if not isinstance(lam, PaddedPartition):
            lam = PaddedPartition(tuple(sorted(lam, reverse=True)))
        if len(lam) < 1:
            raise DomainError('a permutahedron needs a vertex with at least one coordinate')
        object.__setattr__(self, 'lam', lam)

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def is_constant(self) -> bool:
        """True when P_lam is a single point."""
        return len(set(self.lam.parts)) <= 1

    def dilate(self, t: int) -> 'PermutahedronSpec':
        """Parameters of the dilate t * P_lam."""
        if t < 0:
            raise DomainError(f'dilation factor must be nonnegative, got {t}')
        return PermutahedronSpec(PaddedPartition(tuple(t * p for p in self.lam.parts)))

    def __str__(self) -> str:
        return f'P({self.lam})'


# ============================================================================
# Named vertices
# ============================================================================

def _require_n(n: int, low: int = 2) -> None:
    if n < low:
        raise DomainError(f'n must be >= {low}, got {n}')


def delta(n: int) -> PaddedPartition:
    """delta_n = (n-2, n-3, ..., 1, 0, 0), of size C(n-1, 2)."""
    _require_n(n)
    return PaddedPartition(tuple(range(n - 2, -1, -1)) + (0,))


def standard(n: int) -> PaddedPartition:
    """Vertex (n-1, ..., 1, 0) of the standard permutahedron."""
    _require_n(n, 1)
    return PaddedPartition(tuple(range(n - 1, -1, -1)))


def trimmed(n: int) -> PaddedPartition:
    """Vertex (n-2, n-2, n-3, ..., 1, 0) of the trimmed standard permutahedron."""
    _require_n(n)
    return PaddedPartition((n - 2,) + tuple(range(n - 2, -1, -1)))


def delta_size(n: int) -> int:
    return comb(n - 1, 2)


# ============================================================================
# Lattice points
# ============================================================================

def is_lattice_point(x: Sequence[int], spec: PermutahedronSpec) -> bool:
    """
    Membership of an integer point in P_lam by the dominance criterion.

    Raises:
        DomainError: If x and lam have different lengths
    """
    if len(x) != spec.n:
        raise DomainError(f'point {tuple(x)} has length {len(x)}, polytope lives in dimension {spec.n}')
    if any(v < 0 for v in x) or sum(x) != spec.lam.size:
        return False
    return dominates(spec.lam, sort_desc(x))


def orbit_reps(spec: PermutahedronSpec) -> Iterator[PaddedPartition]:
    """Every padded partition dominated by lam: one per S_n-orbit of lattice points."""
    return dominated_by(spec.lam)


def lattice_points(spec: PermutahedronSpec) -> Iterator[LatticePoint]:
    """All lattice points of P_lam, orbit by orbit."""
    for rep in orbit_reps(spec):
        yield from distinct_permutations(rep.parts)


def lattice_point_count(spec: PermutahedronSpec) -> int:
    """|Lat(P_lam)| as a sum of orbit sizes."""
    count = sum(orbit_size(rep) for rep in orbit_reps(spec))
    logger.debug(f'{spec} has {count} lattice points')
    return count


def trimmed_to_delta(x: Sequence[int], n: int) -> LatticePoint:
    """
    Translate by (n-2, ..., n-2) and negate: x -> (n-2 - x_1, ..., n-2 - x_n).

    Carries the lattice points of the trimmed standard permutahedron onto
    those of P_{delta_n}; applying it twice gives back x.
    """
    if len(x) != n:
        raise DomainError(f'point {tuple(x)} must have length {n}')
    return tuple(n - 2 - v for v in x)


# ============================================================================
# Restricted orbits and dominated representatives
# ============================================================================

def restricted_orbit_reps(n: int) -> List[Tuple[PaddedPartition, int]]:
    """
    S_{n-1}-orbits of Lat(P_{delta_n}) obtained by fixing the last coordinate.

    Returns:
        (rest, last) pairs: rest is a padded partition of length n-1 and last
        the value held by the last coordinate
    """
    result = []
    for rep in dominated_by(delta(n)):
        parts = list(rep.parts)
        for value in sorted(Counter(parts), reverse=True):
            rest = list(parts)
            rest.remove(value)
            result.append((PaddedPartition(tuple(rest)), value))
    return result


def is_dominated_by_delta(lam: Sequence[int], n: int) -> bool:
    """True iff lam lies in Par_{<= delta_n}."""
    target = delta(n)
    if len(lam) != n or sum(lam) != target.size:
        return False
    return dominates(target, sort_desc(lam))


def dominated_representative(lam: Sequence[int], n: int) -> PaddedPartition:
    """
    The member of the shift column of lam in Y_{1,n} lying in Par_{<= delta_n}.

    Raises:
        ConsistencyError: If the column does not meet Par_{<= delta_n} exactly once
    """
    column = shift_column(lam, CmnSpec(1, n))
    hits = [entry for entry in column if is_dominated_by_delta(entry, n)]
    if len(hits) != 1:
        raise ConsistencyError(
            f'shift column of {PaddedPartition(tuple(lam))} meets Par(<= delta_{n}) {len(hits)} times'
        )
    return hits[0]
