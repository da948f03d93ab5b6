"""
Permutahedron: The Representation on Lattice Points of P_{delta_n}

S_n permutes the lattice points of P_{delta_n}. The orbit of a dominated
partition lam has stabilizer a Young subgroup of shape mult(lam), so the
Frobenius characteristic is a sum of h_{mult(lam)}.
"""

import logging
from fractions import Fraction
from typing import Iterable, List

from parkhedron.core.partitions import dominated_by, dominates, multiplicity_partition, sort_desc
from parkhedron.core.types import CycleType
from parkhedron.errors import ConsistencyError, DomainError
from parkhedron.permutahedron.polytope import delta, delta_size, restricted_orbit_reps
from parkhedron.symfunc.ring import SymFunc, h_sum

logger = logging.getLogger(__name__)


def frobenius_gamma(n: int) -> SymFunc:
    """Frobenius characteristic of S_n acting on Lat(P_{delta_n})."""
    return h_sum((multiplicity_partition(lam) for lam in dominated_by(delta(n))), n)


def frobenius_gamma_restricted(n: int) -> SymFunc:
    """
    The restriction of gamma_n to S_{n-1}, read off the orbits that fix the last coordinate.

    Returns:
        Sum of h_{mult(rest)} over restricted_orbit_reps(n)
    """
    if n < 2:
        raise DomainError(f'n must be >= 2, got {n}')
    return h_sum((multiplicity_partition(rest) for rest, _ in restricted_orbit_reps(n)), n - 1)


def _as_cycle_type(mu) -> CycleType:
    return mu if isinstance(mu, CycleType) else CycleType(mu)


def _expand(values: Iterable[int], cycles) -> List[int]:
    point = []
    for value, length in zip(values, cycles):
        point.extend([value] * length)
    return point


def fixed_point_count(n: int, mu) -> int:
    """
    Lattice points of P_{delta_n} fixed by a permutation of cycle type mu, by search.

    A fixed point is constant on each cycle, so this enumerates one value
    y_i in [0, n-2] per cycle with sum(mu_i * y_i) = C(n-1, 2) and keeps the
    expansions whose sorted form is dominated by delta_n.

    Raises:
        DomainError: If |mu| != n
    """
    mu = _as_cycle_type(mu)
    if mu.n != n:
        raise DomainError(f'cycle type {mu} has size {mu.n}, expected {n}')
    target = delta(n)
    total = delta_size(n)
    cycles = mu.parts
    top = n - 2
    # Largest weight the remaining cycles can still absorb
    room = [top * sum(cycles[i:]) for i in range(len(cycles) + 1)]
    values = []
    count = 0

    def search(index, remaining):
        nonlocal count
        if index == len(cycles):
            if remaining == 0 and dominates(target, sort_desc(_expand(values, cycles))):
                count += 1
            return
        length = cycles[index]
        for value in range(0, min(top, remaining // length) + 1):
            rest = remaining - value * length
            if rest > room[index + 1]:
                continue
            values.append(value)
            search(index + 1, rest)
            values.pop()

    search(0, total)
    logger.debug(f'{count} lattice points of P(delta_{n}) fixed by cycle type {mu}')
    return count


def formula_factor(n: int, d: int) -> int:
    """f(d): 1 if d = 1, 2 if d = 2 and n = 2 (mod 4), else 0."""
    if d == 1:
        return 1
    if d == 2 and n % 4 == 2:
        return 2
    return 0


def fixed_point_formula(n: int, mu) -> int:
    """
    Closed form f(d) * n^(l-2) for the fixed-point count, l = number of cycles.

    Evaluated as an exact rational, since l = 1 gives a factor 1/n.

    Raises:
        DomainError: If |mu| != n
        ConsistencyError: If the value is not an integer
    """
    mu = _as_cycle_type(mu)
    if mu.n != n:
        raise DomainError(f'cycle type {mu} has size {mu.n}, expected {n}')
    value = formula_factor(n, mu.d) * Fraction(n) ** (mu.length - 2)
    if value.denominator != 1:
        raise ConsistencyError(f'fixed-point formula gave {value} for n={n}, mu={mu}')
    return value.numerator
