"""
Symmetric Functions: Ring Operations
Homogeneous symmetric functions in the h (complete homogeneous) or p
(power-sum) basis with exact rational coefficients.
"""

from collections import Counter
from fractions import Fraction
from math import factorial, prod
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple, Union

from parkhedron.core.types import Partition
from parkhedron.errors import DomainError

BASES = ('h', 'p')

Coefficient = Union[int, Fraction]


def _as_partition(key) -> Partition:
    if isinstance(key, Partition):
        return key
    return Partition(tuple(sorted(key, reverse=True)))


def merge_parts(lam: Partition, mu: Partition) -> Partition:
    """Union of two partitions as multisets (the index of h_lam * h_mu)."""
    return Partition(tuple(sorted(lam.parts + mu.parts, reverse=True)))


class SymFunc:
    """
    A homogeneous symmetric function stored as {Partition: Fraction} in one basis.

    Values are immutable. Zero coefficients are never stored. Equality is
    basis-aware: both sides are compared in the p basis.
    """

    __slots__ = ('basis', 'degree', '_terms')

    def __init__(self, basis: str, degree: int, terms: Mapping = None):
        if basis not in BASES:
            raise DomainError(f'unknown basis {basis!r}; expected one of {BASES}')
        if degree < 0:
            raise DomainError(f'degree must be nonnegative, got {degree}')
        clean: Dict[Partition, Fraction] = {}
        for key, coeff in (terms or {}).items():
            lam = _as_partition(key)
            if lam.size != degree:
                raise DomainError(f'term {basis}[{lam}] has degree {lam.size}, expected {degree}')
            total = clean.get(lam, Fraction(0)) + Fraction(coeff)
            if total:
                clean[lam] = total
            else:
                clean.pop(lam, None)
        object.__setattr__(self, 'basis', basis)
        object.__setattr__(self, 'degree', degree)
        object.__setattr__(self, '_terms', MappingProxyType(clean))

    def __setattr__(self, name, value):
        raise AttributeError('SymFunc values are immutable')

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return self._terms

    def coefficient(self, lam) -> Fraction:
        """Coefficient of the basis element indexed by lam (0 if absent)."""
        return self._terms.get(_as_partition(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_h_positive(self) -> bool:
        """True for h-basis functions whose coefficients are all positive integers."""
        return self.basis == 'h' and all(
            c > 0 and c.denominator == 1 for c in self._terms.values()
        )

    def sorted_terms(self) -> Tuple[Tuple[Partition, Fraction], ...]:
        """Terms in reverse-lexicographic partition order."""
        return tuple(sorted(self._terms.items(), key=lambda item: item[0].parts, reverse=True))

    # Arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, Rational):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        if self.degree != other.degree:
            return False
        if self.basis == other.basis:
            return dict(self._terms) == dict(other._terms)
        from parkhedron.symfunc.conversion import to_p_basis
        return dict(to_p_basis(self).terms) == dict(to_p_basis(other).terms)

    __hash__ = None

    def __repr__(self):
        from parkhedron.symfunc.text import format_symfunc
        return f'SymFunc({format_symfunc(self)!r})'


# ============================================================================
# Constructors
# ============================================================================

def zero(degree: int = 0, basis: str = 'h') -> SymFunc:
    """The zero function of a given degree."""
    return SymFunc(basis, degree)


def unit(basis: str = 'h') -> SymFunc:
    """The degree-0 unit: the empty partition with coefficient 1."""
    return SymFunc(basis, 0, {Partition(()): 1})


def h_monomial(lam) -> SymFunc:
    """The complete homogeneous function h_lam."""
    lam = _as_partition(lam)
    return SymFunc('h', lam.size, {lam: 1})


def p_monomial(mu) -> SymFunc:
    """The power-sum function p_mu."""
    mu = _as_partition(mu)
    return SymFunc('p', mu.size, {mu: 1})


def h_sum(partitions: Iterable, degree: int) -> SymFunc:
    """Sum of h_lam over an iterable of partitions (repeats add up)."""
    counts = Counter(_as_partition(lam) for lam in partitions)
    return SymFunc('h', degree, counts)


# ============================================================================
# Linear and ring operations
# ============================================================================

def add(f: SymFunc, g: SymFunc) -> SymFunc:
    """
    Sum of two functions of equal degree.

    Mixed bases are added in the p basis. A zero of degree 0 (what parse('0')
    returns) is an identity for every degree.

    Raises:
        DomainError: On a degree mismatch
    """
    if g.is_zero() and g.degree in (0, f.degree):
        return f
    if f.is_zero() and f.degree in (0, g.degree):
        return g
    if f.degree != g.degree:
        raise DomainError(f'cannot add functions of degree {f.degree} and {g.degree}')
    if f.basis != g.basis:
        from parkhedron.symfunc.conversion import to_p_basis
        f, g = to_p_basis(f), to_p_basis(g)
    terms = dict(f.terms)
    for lam, coeff in g.terms.items():
        terms[lam] = terms.get(lam, Fraction(0)) + coeff
    return SymFunc(f.basis, f.degree, terms)


def scale(f: SymFunc, q: Coefficient) -> SymFunc:
    """Multiply every coefficient by the rational q."""
    q = Fraction(q)
    return SymFunc(f.basis, f.degree, {lam: coeff * q for lam, coeff in f.terms.items()})


def multiply_terms(left: Mapping[Partition, Fraction],
                   right: Mapping[Partition, Fraction]) -> Dict[Partition, Fraction]:
    """Product of two term maps in a multiplicative basis (indices merge)."""
    result: Dict[Partition, Fraction] = {}
    for lam, a in left.items():
        for mu, b in right.items():
            key = merge_parts(lam, mu)
            result[key] = result.get(key, Fraction(0)) + a * b
    return result


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two functions; h and p are both multiplicative bases."""
    if f.basis != g.basis:
        from parkhedron.symfunc.conversion import to_p_basis
        f, g = to_p_basis(f), to_p_basis(g)
    return SymFunc(f.basis, f.degree + g.degree, multiply_terms(f.terms, g.terms))


def z_lambda(lam) -> int:
    """Centralizer order prod_k k^{m_k} m_k! of a permutation with cycle type lam."""
    lam = _as_partition(lam)
    return prod(k ** m * factorial(m) for k, m in Counter(lam.parts).items())
