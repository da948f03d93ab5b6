"""
parkhedron Core Module: Binary Words
Rotations, primitivity, least rotations, Lyndon words and run structure.

Positions exposed to callers are 1-indexed; order on letters is 0 < 1.
"""

from itertools import combinations, groupby
from typing import Iterator

from parkhedron.core.numbers import divisors
from parkhedron.core.types import BinaryWord, Partition
from parkhedron.errors import DomainError


def rotate(w: BinaryWord, j: int) -> BinaryWord:
    """
    Rotate a word left j times: rot(w) = w_2 ... w_k w_1.

    Args:
        w: Word to rotate
        j: Number of steps, taken modulo |w| (negative values rotate right)

    Returns:
        rot^j(w)
    """
    k = len(w)
    if k == 0:
        return w
    j %= k
    return BinaryWord._trusted(w.letters[j:] + w.letters[:j])


def is_primitive(w: BinaryWord) -> bool:
    """
    Check that no proper rotation of w equals w.

    Raises:
        DomainError: If w is empty
    """
    k = len(w)
    if k == 0:
        raise DomainError('primitivity is undefined for the empty word')
    letters = w.letters
    # A word equal to a proper rotation is periodic with a period dividing |w|
    return all(letters[d:] + letters[:d] != letters for d in divisors(k) if d < k)


def least_rotation(w: BinaryWord) -> int:
    """
    Index of the lexicographically least rotation of w, in linear time.

    Two candidate start indices race; whenever they disagree after a common
    run of k letters, the losing candidate and everything it covered is
    skipped. Returns the smallest index j with rot^j(w) minimal.

    Raises:
        DomainError: If w is empty
    """
    letters = w.letters
    n = len(letters)
    if n == 0:
        raise DomainError('least rotation is undefined for the empty word')
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = letters[(i + k) % n]
        b = letters[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


def least_rotation_naive(w: BinaryWord) -> int:
    """Quadratic oracle for least_rotation: minimum over all rotations."""
    letters = w.letters
    n = len(letters)
    if n == 0:
        raise DomainError('least rotation is undefined for the empty word')
    return min(range(n), key=lambda j: (letters[j:] + letters[:j], j))


def is_lyndon(w: BinaryWord) -> bool:
    """A Lyndon word is primitive and is its own least rotation."""
    return is_primitive(w) and least_rotation(w) == 0


def runs_of_ones(w: BinaryWord) -> Partition:
    """
    Lengths of the maximal runs of 1s in w, sorted decreasingly.

    Raises:
        DomainError: If w starts with 1 (cyclic wrap-around would merge runs)
    """
    if len(w) and w[0] == 1:
        raise DomainError(f'runs_of_ones needs a word starting with 0, got {w}')
    runs = [len(list(group)) for letter, group in groupby(w.letters) if letter == 1]
    return Partition(tuple(sorted(runs, reverse=True)))


def enumerate_lyndon_fixed_content(zeros: int, ones: int) -> Iterator[BinaryWord]:
    """
    Generate every binary Lyndon word with the given letter content.

    Walks the prenecklace tree in lexicographic order, only descending into
    letters that are still available; a full-length prenecklace whose
    period equals its length is Lyndon.

    Args:
        zeros: Number of 0s
        ones: Number of 1s

    Yields:
        Lyndon words in lexicographic order
    """
    if zeros < 0 or ones < 0:
        raise DomainError(f'letter content must be nonnegative: ({zeros}, {ones})')
    length = zeros + ones
    if length == 0:
        return
    word = [0] * (length + 1)  # word[0] is a sentinel; letters live in word[1:]
    remaining = [zeros, ones]

    def extend(t, p):
        if t > length:
            if p == length:
                yield BinaryWord._trusted(tuple(word[1:]))
            return
        inherited = word[t - p]
        for letter in (0, 1):
            if letter < inherited or remaining[letter] == 0:
                continue
            word[t] = letter
            remaining[letter] -= 1
            yield from extend(t + 1, p if letter == inherited else t)
            remaining[letter] += 1

    yield from extend(1, 1)


def lyndon_words_bruteforce(zeros: int, ones: int) -> Iterator[BinaryWord]:
    """Oracle: filter all words of the given content by is_lyndon, in lexicographic order."""
    length = zeros + ones
    if length == 0:
        return
    for zero_positions in combinations(range(length), zeros):
        letters = [1] * length
        for position in zero_positions:
            letters[position] = 0
        word = BinaryWord._trusted(tuple(letters))
        if is_lyndon(word):
            yield word
