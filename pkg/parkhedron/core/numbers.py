"""
parkhedron Core Module: Number Theory Helpers
Möbius function, divisors, gcds and Catalan numbers over Python integers.
"""

from math import comb, gcd
from typing import Iterable, List

from sympy import divisors as sympy_divisors, factorint

from parkhedron.errors import DomainError


def _require_positive(k, what):
    if k < 1:
        raise DomainError(f'{what} needs a positive integer, got {k}')


def mobius(k: int) -> int:
    """Möbius function: 0 if k has a square factor, else (-1)^(number of primes)."""
    _require_positive(k, 'mobius')
    exponents = factorint(k)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def divisors(k: int) -> List[int]:
    """Positive divisors of k in increasing order."""
    _require_positive(k, 'divisors')
    return [int(d) for d in sympy_divisors(k)]


def gcd_all(parts: Iterable[int]) -> int:
    """GCD of a nonempty collection of positive integers."""
    parts = list(parts)
    if not parts:
        raise DomainError('gcd of an empty collection is undefined')
    for part in parts:
        _require_positive(part, 'gcd_all')
    return gcd(*parts)


def catalan(k: int) -> int:
    """The k-th Catalan number C(2k, k) / (k + 1)."""
    if k < 0:
        raise DomainError(f'catalan needs k >= 0, got {k}')
    return comb(2 * k, k) // (k + 1)
