"""
parkhedron Symmetric Functions Package
Exact h- and p-basis arithmetic, characters and restriction.
"""

from parkhedron.symfunc.ring import (
    BASES,
    SymFunc,
    zero,
    unit,
    h_monomial,
    p_monomial,
    h_sum,
    add,
    scale,
    multiply,
    z_lambda,
)

from parkhedron.symfunc.conversion import (
    to_p_basis,
    character,
    restrict,
    restrict_via_power_sums,
    transition_matrix,
)

from parkhedron.symfunc.text import (
    parse,
    format_symfunc,
    to_json,
    from_json,
)

__all__ = [
    'BASES',
    'SymFunc',
    'zero',
    'unit',
    'h_monomial',
    'p_monomial',
    'h_sum',
    'add',
    'scale',
    'multiply',
    'z_lambda',
    'to_p_basis',
    'character',
    'restrict',
    'restrict_via_power_sums',
    'transition_matrix',
    'parse',
    'format_symfunc',
    'to_json',
    'from_json',
]
