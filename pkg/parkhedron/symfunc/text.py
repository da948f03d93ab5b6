"""
Symmetric Functions: Text and JSON Forms

Text grammar (whitespace insignificant):

    expr   := "0" | ["-"] term (("+" | "-") term)*
    term   := [coeff] basis "[" parts "]"
    coeff  := integer | integer "/" integer
    basis  := "h" | "p"
    parts  := empty | integer ("," integer)*

Canonical output lists terms in reverse-lexicographic partition order, omits
unit coefficients and writes negative terms with a " - " separator.
"""

import re
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from parkhedron.core.types import Partition
from parkhedron.errors import ParseError
from parkhedron.symfunc.ring import BASES, SymFunc

_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<sym>[hp\[\],/+\-]))')


class _Scanner:
    """Tokenizer with one token of lookahead; positions are 0-indexed offsets."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == '':
                break
            match = _TOKEN.match(text, pos)
            if not match:
                offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f'unexpected character {text[offset]!r}', offset)
            kind = 'int' if match.group('int') is not None else 'sym'
            value = match.group(kind)
            self.tokens.append((kind, value, match.start(kind)))
            pos = match.end()
        self.index = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def position(self) -> int:
        token = self.peek()
        return token[2] if token else len(self.text)

    def take(self) -> Tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise ParseError('unexpected end of input', len(self.text))
        self.index += 1
        return token

    def expect(self, value: str) -> None:
        kind, got, position = self.take()
        if got != value:
            raise ParseError(f'expected {value!r}, found {got!r}', position)

    def take_int(self) -> int:
        kind, value, position = self.take()
        if kind != 'int':
            raise ParseError(f'expected an integer, found {value!r}', position)
        return int(value)


def _parse_term(scanner: _Scanner) -> Tuple[str, Partition, Fraction, int]:
    start = scanner.position()
    coeff = Fraction(1)
    token = scanner.peek()
    if token and token[0] == 'int':
        numerator = scanner.take_int()
        token = scanner.peek()
        if token and token[1] == '/':
            scanner.take()
            denominator_at = scanner.position()
            denominator = scanner.take_int()
            if denominator == 0:
                raise ParseError('zero denominator', denominator_at)
            coeff = Fraction(numerator, denominator)
        else:
            coeff = Fraction(numerator)

    kind, basis, position = scanner.take()
    if basis not in BASES:
        raise ParseError(f'expected a basis letter h or p, found {basis!r}', position)
    scanner.expect('[')
    parts = []
    token = scanner.peek()
    if token and token[1] != ']':
        while True:
            part_at = scanner.position()
            part = scanner.take_int()
            if part == 0:
                raise ParseError('partition parts must be positive', part_at)
            parts.append(part)
            token = scanner.peek()
            if token and token[1] == ',':
                scanner.take()
                continue
            break
    scanner.expect(']')
    return basis, Partition(tuple(sorted(parts, reverse=True))), coeff, start


def parse(text: str) -> SymFunc:
    """
    Parse a symmetric function from its text form.

    Args:
        text: e.g. "h[3] + 3 h[2,1] - 1/2 h[1,1,1]", "h[]" or "0"

    Returns:
        SymFunc

    Raises:
        ParseError: On malformed text, mixed bases or mixed degrees
    """
    if text.strip() == '0':
        return SymFunc('h', 0)
    scanner = _Scanner(text)
    if scanner.peek() is None:
        raise ParseError('empty expression', 0)

    sign = 1
    token = scanner.peek()
    if token[1] == '-':
        scanner.take()
        sign = -1

    basis = None
    degree = None
    terms: Dict[Partition, Fraction] = {}
    while True:
        term_basis, lam, coeff, position = _parse_term(scanner)
        if basis is None:
            basis, degree = term_basis, lam.size
        elif term_basis != basis:
            raise ParseError(f'mixed bases {basis} and {term_basis}', position)
        elif lam.size != degree:
            raise ParseError(f'term of degree {lam.size} in a degree-{degree} expression', position)
        terms[lam] = terms.get(lam, Fraction(0)) + sign * coeff

        token = scanner.peek()
        if token is None:
            break
        if token[1] not in '+-' or token[0] != 'sym':
            raise ParseError(f'expected "+" or "-", found {token[1]!r}', token[2])
        scanner.take()
        sign = 1 if token[1] == '+' else -1

    return SymFunc(basis, degree, terms)


def _format_coefficient(magnitude: Fraction) -> str:
    return '' if magnitude == 1 else f'{magnitude} '


def format_symfunc(f: SymFunc) -> str:
    """Canonical text form; parse(format_symfunc(f)) == f."""
    if f.is_zero():
        return '0'
    pieces = []
    for index, (lam, coeff) in enumerate(f.sorted_terms()):
        body = f'{_format_coefficient(abs(coeff))}{f.basis}[{lam}]'
        if index == 0:
            pieces.append(f'-{body}' if coeff < 0 else body)
        else:
            pieces.append(f' - {body}' if coeff < 0 else f' + {body}')
    return ''.join(pieces)


def to_json(f: SymFunc) -> Dict[str, Any]:
    """JSON-ready dict: {basis, degree, terms: [{partition, num, den}]}."""
    return {
        'basis': f.basis,
        'degree': f.degree,
        'terms': [
            {'partition': list(lam.parts), 'num': coeff.numerator, 'den': coeff.denominator}
            for lam, coeff in f.sorted_terms()
        ],
    }


def from_json(obj: Dict[str, Any]) -> SymFunc:
    """
    Rebuild a SymFunc from to_json output.

    Raises:
        ParseError: If a field is missing or malformed (position is the term index)
    """
    try:
        basis = obj['basis']
        degree = int(obj['degree'])
        raw_terms = obj['terms']
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f'malformed symmetric-function object ({e})', 0)
    terms: Dict[Partition, Fraction] = {}
    for index, term in enumerate(raw_terms):
        try:
            lam = Partition(tuple(term['partition']))
            coeff = Fraction(int(term['num']), int(term['den']))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise ParseError(f'malformed term ({e})', index)
        terms[lam] = terms.get(lam, Fraction(0)) + coeff
    try:
        return SymFunc(basis, degree, terms)
    except ValueError as e:
        raise ParseError(str(e), 0)
