"""
Parking Space: Closed-Form Counts

|Y_{m,n}| is a Moebius-weighted divisor sum of binomials; the Lyndon words
of B_{m,n} number |Y_{m,n}| / n because every shift class has exactly n
sorted members.
"""

from math import comb

from parkhedron.core.numbers import divisors, mobius
from parkhedron.errors import ConsistencyError
from parkhedron.parking_space.space import CmnSpec


def count_C(spec: CmnSpec) -> int:
    """|C_{m,n}| = n^(N-1)."""
    return spec.n ** (spec.N - 1)


def count_classes(spec: CmnSpec) -> int:
    """Number of shift classes of C_{m,n}: n^(N-2)."""
    return spec.n ** (spec.N - 2)


def count_Y_formula(spec: CmnSpec) -> int:
    """
    |Y_{m,n}| = (1/n) sum over d | n of (-1)^(m(n+d)) mu(n/d) C((m+1)d - 1, md).

    Raises:
        UnsupportedParameterError: For a non-default residue
        ConsistencyError: If the divisor sum is not divisible by n
    """
    spec.require_default('count_Y_formula')
    m, n = spec.m, spec.n
    total = sum(
        (-1) ** (m * (n + d)) * mobius(n // d) * comb((m + 1) * d - 1, m * d)
        for d in divisors(n)
    )
    if total % n:
        raise ConsistencyError(f'divisor sum {total} is not divisible by n={n}')
    return total // n


def count_lyndon_formula(spec: CmnSpec) -> int:
    """|B^L_{m,n}| = |Y_{m,n}| / n."""
    count = count_Y_formula(spec)
    if count % spec.n:
        raise ConsistencyError(f'|Y| = {count} is not divisible by n={spec.n}')
    return count // spec.n
