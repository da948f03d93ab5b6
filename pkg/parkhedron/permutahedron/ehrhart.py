"""
Permutahedron: Ehrhart Interpolation

Counts lattice points of the dilates t * P_lam for t = 0, ..., n-1 and
interpolates the Ehrhart polynomial exactly over the rationals. Its leading
coefficient is the normalized volume relative to the lattice of the affine
span.
"""

import logging
from fractions import Fraction
from typing import List

from sympy import Poly, Rational, interpolate
from sympy.abc import t

from parkhedron.errors import ConsistencyError, DegeneratePolytopeError, DomainError
from parkhedron.permutahedron.polytope import PermutahedronSpec, lattice_point_count

logger = logging.getLogger(__name__)


def ehrhart_counts(spec: PermutahedronSpec, t_max: int) -> List[int]:
    """
    |Lat(t * P_lam)| for t = 0, ..., t_max.

    Raises:
        DomainError: If t_max is negative
    """
    if t_max < 0:
        raise DomainError(f't_max must be nonnegative, got {t_max}')
    return [lattice_point_count(spec.dilate(k)) for k in range(t_max + 1)]


def ehrhart_polynomial(spec: PermutahedronSpec) -> Poly:
    """
    The Ehrhart polynomial of P_lam as a sympy Poly in t over QQ.

    Interpolates through the n samples t = 0, ..., n-1, enough for the
    degree-(n-1) polynomial of a full-dimensional permutahedron.
    """
    counts = ehrhart_counts(spec, spec.n - 1)
    if len(counts) == 1:
        return Poly(counts[0], t, domain='QQ')
    expression = interpolate(list(enumerate(counts)), t)
    polynomial = Poly(expression, t, domain='QQ')
    logger.debug(f'Ehrhart polynomial of {spec}: {polynomial.as_expr()}')
    return polynomial


def normalized_volume(spec: PermutahedronSpec) -> Fraction:
    """
    Leading coefficient of the Ehrhart polynomial, for a non-constant vertex.

    Integral for the standard permutahedron (n^(n-2)); a proper fraction for
    thin vertices such as (1, 0, 0), whose dilates are simplices.

    Raises:
        DegeneratePolytopeError: If lam is constant (P_lam is a point)
        ConsistencyError: If the coefficient of t^(n-1) is not positive
    """
    if spec.is_constant:
        raise DegeneratePolytopeError(f'{spec} is a single point and has no positive-dimensional volume')
    polynomial = ehrhart_polynomial(spec)
    leading = Rational(polynomial.coeff_monomial(t ** (spec.n - 1)))
    if leading <= 0:
        raise ConsistencyError(f'normalized volume of {spec} came out as {leading}')
    return Fraction(int(leading.p), int(leading.q))
