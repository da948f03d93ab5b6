"""
Symmetric Functions: Basis Conversion, Characters and Restriction

The h to p transition uses h_k = sum over mu |- k of p_mu / z_mu. Products
of rows expand by multiplying row expansions and merging partition indices.
Transition tables are built once per degree and memoized in the shared cache.
"""

import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, Mapping

from sympy import Matrix, Rational

from parkhedron.cache import get_default_cache
from parkhedron.core.partitions import partitions
from parkhedron.core.types import CycleType, Partition
from parkhedron.errors import DomainError
from parkhedron.symfunc.ring import SymFunc, multiply_terms, z_lambda

logger = logging.getLogger(__name__)

TermMap = Dict[Partition, Fraction]


def _row_expansion(k: int) -> Mapping[Partition, Fraction]:
    """p-expansion of the single row h_k."""

    def build():
        return {mu: Fraction(1, z_lambda(mu)) for mu in partitions(k)}

    return get_default_cache().get_or_set(('h-row', k), build)


def _transition_table(degree: int) -> Mapping[Partition, TermMap]:
    """p-expansion of every h_lam with |lam| = degree."""

    def build():
        logger.debug(f"Building h->p transition table for degree {degree}")
        table = {}
        for lam in partitions(degree):
            terms: TermMap = {Partition(()): Fraction(1)}
            for part in lam.parts:
                terms = multiply_terms(terms, _row_expansion(part))
            table[lam] = terms
        return table

    return get_default_cache().get_or_set(('h-to-p', degree), build)


def to_p_basis(f: SymFunc) -> SymFunc:
    """
    Express f in the power-sum basis.

    Args:
        f: Function in either basis (p-basis input is returned unchanged)

    Returns:
        The same function in the p basis
    """
    if f.basis == 'p':
        return f
    table = _transition_table(f.degree)
    terms: TermMap = {}
    for lam, coeff in f.terms.items():
        for mu, value in table[lam].items():
            terms[mu] = terms.get(mu, Fraction(0)) + coeff * value
    return SymFunc('p', f.degree, terms)


def _as_cycle_type(mu) -> CycleType:
    return mu if isinstance(mu, CycleType) else CycleType(mu)


def character(f: SymFunc, mu) -> Fraction:
    """
    Character value at the conjugacy class of cycle type mu.

    Reads chi(mu) off Frob = sum chi(mu) p_mu / z_mu, so for a permutation
    module this is the number of points fixed by a permutation of type mu.

    Args:
        f: Frobenius characteristic
        mu: CycleType (or a partition of the same size)

    Returns:
        z(mu) times the p_mu coefficient of f, as an exact rational

    Raises:
        DomainError: If |mu| differs from the degree of f
    """
    mu = _as_cycle_type(mu)
    if mu.n != f.degree:
        raise DomainError(f'cycle type {mu} has size {mu.n}, function has degree {f.degree}')
    return z_lambda(mu.partition) * to_p_basis(f).coefficient(mu.partition)


def _lower_one_part(lam: Partition, value: int) -> Partition:
    parts = list(lam.parts)
    # The last occurrence keeps the result weakly decreasing
    index = len(parts) - 1 - parts[::-1].index(value)
    if value == 1:
        del parts[index]
    else:
        parts[index] = value - 1
    return Partition(tuple(parts))


def restrict(f: SymFunc) -> SymFunc:
    """
    Restrict a representation of S_n to S_{n-1}.

    On the h basis this is the Leibniz rule: h_lam maps to the sum over
    distinct part values v of mult(v) * h_lam', where lam' lowers one copy of
    v by one and drops it if it reaches zero. p-basis input is differentiated
    by p_1 instead.

    Args:
        f: Frobenius characteristic of degree >= 1

    Returns:
        The characteristic of the restriction, degree one lower

    Raises:
        DomainError: If f has degree 0
    """
    if f.degree == 0:
        raise DomainError('cannot restrict a degree-0 function')
    if f.basis == 'p':
        return restrict_via_power_sums(f)
    terms: TermMap = {}
    for lam, coeff in f.terms.items():
        for value, multiplicity in Counter(lam.parts).items():
            key = _lower_one_part(lam, value)
            terms[key] = terms.get(key, Fraction(0)) + coeff * multiplicity
    return SymFunc('h', f.degree - 1, terms)


def restrict_via_power_sums(f: SymFunc) -> SymFunc:
    """
    Restrict by applying d/dp_1 to the p-expansion.

    Raises:
        DomainError: If f has degree 0
    """
    if f.degree == 0:
        raise DomainError('cannot restrict a degree-0 function')
    terms: TermMap = {}
    for mu, coeff in to_p_basis(f).terms.items():
        ones = mu.parts.count(1)
        if ones:
            key = _lower_one_part(mu, 1)
            terms[key] = terms.get(key, Fraction(0)) + coeff * ones
    return SymFunc('p', f.degree - 1, terms)


def transition_matrix(degree: int):
    """
    The h to p transition matrix of a degree as a sympy Matrix.

    Rows are indexed by h_lam and columns by p_mu, both in reverse-lexicographic
    order. Used to check that the h basis maps to an independent family.
    """
    index = list(partitions(degree))
    table = _transition_table(degree)

    def entry(lam, mu):
        value = table[lam].get(mu)
        return Rational(value.numerator, value.denominator) if value else 0

    return Matrix([[entry(lam, mu) for mu in index] for lam in index])


__all__ = [
    'to_p_basis',
    'character',
    'restrict',
    'restrict_via_power_sums',
    'transition_matrix',
]
