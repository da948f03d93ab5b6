"""
Verification Suites

Each suite runs named checks over a range of parameters and collects them
into a VerifyReport. Checks are grouped into tasks; tasks may run on a
thread pool but the report always lists checks in task submission order.
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from parkhedron.classical import (
    enumerate_nondecreasing_pf,
    enumerate_parking_functions,
    frobenius_pf,
    is_parking_function,
)
from parkhedron.core import (
    BinaryWord,
    PaddedPartition,
    Partition,
    catalan,
    distinct_permutations,
    dominates,
    enumerate_lyndon_fixed_content,
    is_lyndon,
    is_primitive,
    least_rotation,
    least_rotation_naive,
    lyndon_words_bruteforce,
    multiplicity_partition,
    orbit_size,
    partitions,
    rotate,
    runs_of_ones,
)
from parkhedron.errors import ParkhedronError
from parkhedron.parking_space import (
    CmnSpec,
    class_representatives,
    count_C,
    count_classes,
    count_lyndon_formula,
    count_subsets_bruteforce,
    count_Y_formula,
    enumerate_B,
    enumerate_B_lyndon,
    enumerate_C,
    enumerate_Y,
    fixed_points_direct,
    frobenius_tau_hat,
    lyndon_partitions,
    orbit_fixed_points,
    parking_representative,
    partition_to_word,
    shift_column,
    shift_columns,
    shift_power,
    shift_via_rotation,
    shifted_size,
    uniform_size_sizes,
    weight,
    word_to_partition,
)
from parkhedron.permutahedron import (
    PermutahedronSpec,
    delta,
    dominated_representative,
    ehrhart_counts,
    fixed_point_count,
    fixed_point_formula,
    frobenius_gamma,
    frobenius_gamma_restricted,
    is_dominated_by_delta,
    lattice_point_count,
    lattice_points,
    normalized_volume,
    orbit_reps,
    restricted_orbit_reps,
    standard,
    trimmed,
    trimmed_to_delta,
)
from parkhedron.symfunc import (
    SymFunc,
    character,
    format_symfunc,
    h_monomial,
    parse,
    restrict,
    restrict_via_power_sums,
    transition_matrix,
)

logger = logging.getLogger(__name__)

# Character checks on the shift quotient stop at this many coordinates
CHARACTER_MAX_N = 10

# Direct fixed-point counting on class representatives stops below this N
DIRECT_FIXED_POINTS_MAX_N = 8

# Primitivity is checked exhaustively up to this word length
PRIMITIVITY_MAX_LENGTH = 16

# Ehrhart interpolation of the standard permutahedron runs up to this n
EHRHART_MAX_N = 5

# Orbit sizes are compared with direct rearrangement counts up to this length
ORBIT_SIZE_MAX_LENGTH = 7

# Parking-function characters are compared point by point up to this length
PF_CHARACTER_MAX_K = 7


# ============================================================================
# Report types
# ============================================================================

class Suite(Enum):
    """Verification suites selectable on the command line."""
    WORDS = 'words'
    ORBITS = 'orbits'
    PERMUTAHEDRON = 'permutahedron'
    RESTRICTION = 'restriction'
    ALGORITHMS = 'algorithms'
    ALL = 'all'


@dataclass
class CheckResult:
    """Outcome of one named check."""
    name: str
    params: Dict[str, Any]
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class VerifyReport:
    """Checks of one verification run, in a fixed order."""
    suite: str
    bounds: Dict[str, int]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def first_failure(self) -> Optional[CheckResult]:
        failures = self.failures
        return failures[0] if failures else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'bounds': dict(self.bounds),
            'passed': self.passed,
            'total': len(self.checks),
            'failed': len(self.failures),
            'checks': [check.to_dict() for check in self.checks],
        }


@dataclass(frozen=True)
class VerifyBounds:
    """Parameter ranges for a verification run."""
    max_n: int
    max_m: int
    word_length: int
    word_zeros: int
    partition_size: int
    enumeration_limit: int

    @classmethod
    def from_config(cls, config, max_n: Optional[int] = None,
                    max_m: Optional[int] = None) -> 'VerifyBounds':
        return cls(
            max_n=max_n if max_n is not None else config.VERIFY_MAX_N,
            max_m=max_m if max_m is not None else config.VERIFY_MAX_M,
            word_length=config.VERIFY_WORD_LENGTH,
            word_zeros=config.VERIFY_WORD_ZEROS,
            partition_size=config.VERIFY_PARTITION_SIZE,
            enumeration_limit=config.ENUMERATION_LIMIT,
        )

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


# ============================================================================
# Check helpers
# ============================================================================

def plain(value: Any) -> Any:
    """Convert a computed value into JSON-ready data for the report."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, SymFunc):
        return format_symfunc(value)
    if isinstance(value, (Partition, PaddedPartition, BinaryWord)):
        return str(value)
    if isinstance(value, dict):
        return {str(plain(key)): plain(item) for key, item in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (set, frozenset)):
        return sorted((plain(item) for item in value), key=str)
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    return str(value)


def _check(name: str, params: Dict[str, Any], expected: Any, actual: Any) -> CheckResult:
    return CheckResult(name, dict(params), plain(expected), plain(actual), expected == actual)


def _holds(name: str, params: Dict[str, Any], counterexample: Any) -> CheckResult:
    """A property check: passes when no counterexample was found."""
    return CheckResult(name, dict(params), None, plain(counterexample), counterexample is None)


def _first(items: Iterable) -> Any:
    return next(iter(items), None)


def _swap_first_two(x):
    return (x[1], x[0]) + tuple(x[2:])


# ============================================================================
# Parking-space checks
# ============================================================================

def check_words(m: int, n: int, limit: int) -> List[CheckResult]:
    """Counting, the word bijection, primitivity, Lyndon counts and shift orbits for one (m, n)."""
    spec = CmnSpec(m, n)
    params = {'m': m, 'n': n}
    results = []
    total = count_C(spec)
    if total <= limit:
        results.append(_check('count-C', params, total, sum(1 for _ in enumerate_C(spec))))

    ys = list(enumerate_Y(spec))
    results.append(_check('orbit-sum-Y', params, total, sum(orbit_size(lam) for lam in ys)))
    results.append(_check('count-Y-formula', params, count_Y_formula(spec), len(ys)))
    if comb(spec.word_length - 1, spec.N) <= limit:
        results.append(_check('count-subsets', params, len(ys), count_subsets_bruteforce(spec)))

    words = [partition_to_word(lam, spec) for lam in ys]
    results.append(_holds('bijection-roundtrip', params, _first(
        lam for lam, w in zip(ys, words) if word_to_partition(w, spec) != lam
    )))
    bs = list(enumerate_B(spec))
    mismatch = set(bs) ^ set(words)
    results.append(_holds('bijection-image', params, min(mismatch, key=str) if mismatch else None))
    if spec.word_length <= PRIMITIVITY_MAX_LENGTH:
        results.append(_holds('primitivity', params, _first(w for w in bs if not is_primitive(w))))

    lyndon = list(enumerate_B_lyndon(spec))
    results.append(_check('lyndon-count', params, count_lyndon_formula(spec), len(lyndon)))
    results.append(_check('lyndon-is-Y-over-n', params, len(ys), n * len(lyndon)))
    results.append(_check('lyndon-filter', params, [w for w in bs if is_lyndon(w)], lyndon))

    bad_size = bad_rotation = None
    for lam in ys:
        column = shift_column(lam, spec)
        if bad_size is None and len(set(column)) != n:
            bad_size = lam
        if bad_rotation is None:
            for j in range(n):
                if shift_via_rotation(lam, spec, j) != column[j] or shifted_size(lam, spec, j) != column[j].size:
                    bad_rotation = {'lambda': lam, 'j': j}
                    break
    results.append(_holds('shift-orbit-size', params, bad_size))
    results.append(_holds('shift-via-rotation', params, bad_rotation))

    tiles = Counter()
    for w in lyndon:
        tiles.update(set(shift_column(word_to_partition(w, spec), spec)))
    overlap = _first(lam for lam, hits in tiles.items() if hits != 1)
    missing = _first(lam for lam in ys if lam not in tiles)
    results.append(_holds('lyndon-columns-tile-Y', params, overlap or missing))
    return results


def check_orbits(m: int, n: int, limit: int) -> List[CheckResult]:
    """The shift-quotient transversal and the characters of its Frobenius characteristic."""
    spec = CmnSpec(m, n)
    params = {'m': m, 'n': n}
    results = []
    classes = count_classes(spec)
    tau_hat = frobenius_tau_hat(spec)
    results.append(_check('tau-hat-dimension', params, classes, character(tau_hat, [1] * spec.N)))
    results.append(_check('tau-hat-h-positive', params, True, tau_hat.is_h_positive()))

    lyndon = lyndon_partitions(spec)
    results.append(_check('class-count', params, classes, sum(orbit_size(lam) for _, lam in lyndon)))

    reps = None
    if classes <= limit:
        reps = list(class_representatives(spec))
        keys = {min(shift_power(x, n, j) for j in range(n)) for x in reps}
        results.append(_check('class-transversal', params, classes, len(keys)))

    if spec.N <= CHARACTER_MAX_N:
        direct = reps if reps is not None and spec.N < DIRECT_FIXED_POINTS_MAX_N else None
        bad = None
        for mu in partitions(spec.N):
            value = character(tau_hat, mu)
            multinomial = sum(orbit_fixed_points(lam, mu) for _, lam in lyndon)
            counted = fixed_points_direct(direct, mu) if direct is not None else multinomial
            if value != multinomial or value != counted or value < 0 or value.denominator != 1:
                bad = {'mu': mu, 'character': value, 'multinomial': multinomial, 'direct': counted}
                break
        results.append(_holds('tau-hat-characters', params, bad))

    if m == 1 and count_C(spec) <= limit:
        chosen = set()
        bad = None
        for x in enumerate_C(spec):
            rep = parking_representative(x, spec)
            chosen.add(rep)
            if bad is None and n >= 3 and parking_representative(_swap_first_two(x), spec) != _swap_first_two(rep):
                bad = x
        results.append(_check('parking-representatives', params, classes, len(chosen)))
        results.append(_holds('parking-representative-equivariance', params, bad))
    return results


def check_orbit_fixtures() -> List[CheckResult]:
    """Worked examples for small (m, n)."""
    results = []
    spec_14 = CmnSpec(1, 4)
    spec_23 = CmnSpec(2, 3)
    results.append(_check(
        'fixture-lyndon', {'m': 1, 'n': 4},
        [BinaryWord.parse('00011101'), BinaryWord.parse('00101011')],
        list(enumerate_B_lyndon(spec_14)),
    ))
    results.append(_check(
        'fixture-Y', {'m': 1, 'n': 4},
        {PaddedPartition.parse(text) for text in ('2100', '1110', '3211', '2221', '3220', '3332', '3310', '3000')},
        set(enumerate_Y(spec_14)),
    ))
    results.append(_check(
        'fixture-columns', {'m': 1, 'n': 4},
        [[PaddedPartition.parse(text) for text in column] for column in
         (('1110', '2221', '3332', '3000'), ('2100', '3211', '3220', '3310'))],
        [list(column.entries) for column in shift_columns(spec_14)],
    ))
    results.append(_check(
        'fixture-lyndon', {'m': 2, 'n': 3},
        [BinaryWord.parse(text) for text in ('001011111', '001111011', '010110111')],
        list(enumerate_B_lyndon(spec_23)),
    ))
    results.append(_check(
        'fixture-columns', {'m': 2, 'n': 3},
        [[PaddedPartition.parse(text) for text in column] for column in
         (('100000', '211111', '222220'), ('111100', '222211', '220000'), ('211000', '221110', '222100'))],
        [list(column.entries) for column in shift_columns(spec_23)],
    ))
    results.append(_check(
        'fixture-tau-hat', {'m': 2, 'n': 3},
        parse('h[5,1] + h[4,2] + h[3,2,1]'),
        frobenius_tau_hat(spec_23),
    ))
    results.append(_check('fixture-no-uniform-transversal', {'m': 2, 'n': 3}, {}, uniform_size_sizes(spec_23)))

    word = partition_to_word(PaddedPartition.parse('22110'), CmnSpec(1, 5))
    results.append(_check('fixture-word', {'m': 1, 'n': 5}, '0001101101', str(word)))
    results.append(_check('fixture-weight', {'m': 1, 'n': 5}, 34, weight(word)))
    return results


# ============================================================================
# Permutahedron checks
# ============================================================================

def check_permutahedron(n: int, limit: int) -> List[CheckResult]:
    """Lattice counts, the h-expansion, unique dominated representatives and fixed points for one n."""
    params = {'n': n}
    results = []
    target = PermutahedronSpec(delta(n))
    results.append(_check('lattice-count', params, n ** (n - 2), lattice_point_count(target)))

    reps = list(orbit_reps(target))
    spec = CmnSpec(1, n)
    results.append(_check(
        'mult-equals-runs', params,
        Counter(runs_of_ones(w) for w in enumerate_B_lyndon(spec)),
        Counter(multiplicity_partition(lam) for lam in reps),
    ))
    gamma = frobenius_gamma(n)
    results.append(_check('gamma-equals-tau-hat', params, frobenius_tau_hat(spec), gamma))

    dominated = set(reps)
    results.append(_holds('shifts-leave-dominated-set', params, _first(
        lam for lam in reps if any(entry in dominated for entry in shift_column(lam, spec)[1:])
    )))
    results.append(_holds('one-dominated-per-class', params, _first(
        column.head for column in shift_columns(spec)
        if sum(1 for entry in column.entries if is_dominated_by_delta(entry, n)) != 1
    )))

    bad = None
    for mu in partitions(n):
        counted = fixed_point_count(n, mu)
        closed = fixed_point_formula(n, mu)
        value = character(gamma, mu)
        if not counted == closed == value:
            bad = {'mu': mu, 'search': counted, 'formula': closed, 'character': value}
            break
    results.append(_holds('fixed-points', params, bad))

    if n ** (n - 2) <= limit:
        images = {trimmed_to_delta(x, n) for x in lattice_points(PermutahedronSpec(trimmed(n)))}
        points = set(lattice_points(target))
        mismatch = images ^ points
        results.append(_holds('trimmed-bijection', params, min(mismatch) if mismatch else None))
        if n >= 2:
            results.append(_holds('trimmed-equivariance', params, _first(
                x for x in points
                if trimmed_to_delta(_swap_first_two(x), n) != _swap_first_two(trimmed_to_delta(x, n))
            )))

    if n <= EHRHART_MAX_N:
        results.append(_check('normalized-volume', params, n ** (n - 2),
                              normalized_volume(PermutahedronSpec(standard(n)))))
    return results


def check_permutahedron_fixtures() -> List[CheckResult]:
    """Worked examples for the trimmed permutahedron."""
    results = [
        _check('fixture-gamma', {'n': 2}, parse('h[2]'), frobenius_gamma(2)),
        _check('fixture-gamma', {'n': 3}, parse('h[2,1]'), frobenius_gamma(3)),
        _check('fixture-gamma', {'n': 4}, parse('h[2,1,1] + h[3,1]'), frobenius_gamma(4)),
        _check('fixture-orbit-reps', {'n': 4},
               [PaddedPartition.parse('2100'), PaddedPartition.parse('1110')],
               list(orbit_reps(PermutahedronSpec(delta(4))))),
        _check('fixture-restricted-orbits', {'n': 4},
               {PaddedPartition.parse(text) for text in ('210', '100', '200', '110', '111')},
               {rest for rest, _ in restricted_orbit_reps(4)}),
        _check('fixture-fixed-points', {'n': 6, 'mu': '2,2,2'}, 12, fixed_point_count(6, [2, 2, 2])),
        _check('fixture-ehrhart-counts', {'lambda': '210'}, [1, 7, 19],
               ehrhart_counts(PermutahedronSpec(standard(3)), 2)),
    ]

    lam = PaddedPartition((7, 5, 5, 5, 4, 4, 2, 2, 2, 0))
    shifted = shift_column(lam, CmnSpec(1, 10))[6]
    params = {'n': 10, 'lambda': str(lam), 'j': 6}
    results.append(_check('fixture-sort-shift', params, PaddedPartition((8, 8, 8, 6, 3, 1, 1, 1, 0, 0)), shifted))
    results.append(_check('fixture-sort-shift-not-dominated', params, False, is_dominated_by_delta(shifted, 10)))
    results.append(_check('fixture-dominated-representative', params, lam, dominated_representative(shifted, 10)))
    return results


# ============================================================================
# Restriction and symmetric-function checks
# ============================================================================

def check_restriction(n: int) -> List[CheckResult]:
    """Res(gamma_n) equals the parking-function representation of S_{n-1}, three ways."""
    params = {'n': n}
    gamma = frobenius_gamma(n)
    pf = frobenius_pf(n - 1)
    return [
        _check('restrict-gamma', params, pf, restrict(gamma)),
        _check('restrict-gamma-power-sums', params, pf, restrict_via_power_sums(gamma)),
        _check('restricted-orbits', params, pf, frobenius_gamma_restricted(n)),
    ]


def check_parking_functions(k: int, limit: int) -> List[CheckResult]:
    """Parking-function counts, orbit representatives and characters for one length."""
    params = {'k': k}
    results = []
    pfs = list(enumerate_parking_functions(k))
    expected = (k + 1) ** (k - 1)
    results.append(_check('pf-count', params, expected, len(pfs)))
    results.append(_check('pf-orbits', params, catalan(k), sum(1 for _ in enumerate_nondecreasing_pf(k))))
    if k ** k <= limit:
        results.append(_check('pf-count-bruteforce', params, expected,
                              sum(1 for a in product(range(k), repeat=k) if is_parking_function(a))))
    pf = frobenius_pf(k)
    results.append(_check('pf-dimension', params, expected, character(pf, [1] * k)))
    if k <= PF_CHARACTER_MAX_K:
        results.append(_holds('pf-characters', params, _first(
            {'mu': mu} for mu in partitions(k) if character(pf, mu) != fixed_points_direct(pfs, mu)
        )))
    return results


def _coset_labels(lam: Partition) -> Tuple[int, ...]:
    """A tuple whose S_k-orbit is the coset space of the Young subgroup S_lam."""
    labels = []
    for value, part in enumerate(lam.parts):
        labels.extend([value] * part)
    return tuple(sorted(labels, reverse=True))


def check_symfunc(k: int) -> List[CheckResult]:
    """Transition-matrix rank, both restriction routes, and characters of h_lam for degree k."""
    params = {'k': k}
    index = list(partitions(k))
    results = [_check('h-to-p-rank', params, len(index), transition_matrix(k).rank())]
    results.append(_holds('restriction-routes', params, _first(
        lam for lam in index if restrict(h_monomial(lam)) != restrict_via_power_sums(h_monomial(lam))
    )))
    if k <= PF_CHARACTER_MAX_K:
        bad = None
        for lam in index:
            labels = _coset_labels(lam)
            points = list(distinct_permutations(labels))
            for mu in index:
                value = character(h_monomial(lam), mu)
                if not value == orbit_fixed_points(labels, mu) == fixed_points_direct(points, mu):
                    bad = {'lambda': lam, 'mu': mu}
                    break
            if bad:
                break
        results.append(_holds('h-characters', params, bad))
    return results


# ============================================================================
# Algorithm cross-checks
# ============================================================================

def _words_with_zeros(length: int, zeros: int) -> Iterable[BinaryWord]:
    for positions in combinations(range(length), zeros):
        letters = [1] * length
        for position in positions:
            letters[position] = 0
        yield BinaryWord(tuple(letters))


def check_least_rotation(length: int, max_zeros: int) -> List[CheckResult]:
    """least_rotation against the quadratic scan, and the Lyndon characterization, for one length."""
    params = {'length': length, 'max_zeros': max_zeros}
    bad_rotation = bad_lyndon = None
    for zeros in range(0, min(max_zeros, length) + 1):
        for w in _words_with_zeros(length, zeros):
            if bad_rotation is None and least_rotation(w) != least_rotation_naive(w):
                bad_rotation = w
            if bad_lyndon is None:
                strictly_least = all(w.letters < rotate(w, j).letters for j in range(1, length))
                if is_lyndon(w) != strictly_least:
                    bad_lyndon = w
    return [
        _holds('least-rotation', params, bad_rotation),
        _holds('lyndon-characterization', params, bad_lyndon),
    ]


def check_lyndon_generation(length: int, max_zeros: int) -> List[CheckResult]:
    """Fixed-content generation against brute-force filtering, for one length."""
    params = {'length': length, 'max_zeros': max_zeros}
    bad = None
    for zeros in range(1, min(max_zeros, length) + 1):
        generated = list(enumerate_lyndon_fixed_content(zeros, length - zeros))
        if generated != list(lyndon_words_bruteforce(zeros, length - zeros)):
            bad = {'zeros': zeros, 'ones': length - zeros}
            break
    return [_holds('lyndon-generation', params, bad)]


def check_dominance_order(k: int) -> List[CheckResult]:
    """Dominance is reflexive, antisymmetric and transitive on padded partitions of k."""
    params = {'k': k}
    padded = [p.pad(k) for p in partitions(k)]
    relation = {(a, b): dominates(a, b) for a in padded for b in padded}
    reflexive = _first(a for a in padded if not relation[a, a])
    antisymmetric = _first((a, b) for a in padded for b in padded
                           if a != b and relation[a, b] and relation[b, a])
    transitive = _first((a, b, c) for a in padded for b in padded if relation[a, b]
                        for c in padded if relation[b, c] and not relation[a, c])
    return [
        _holds('dominance-reflexive', params, reflexive),
        _holds('dominance-antisymmetric', params, antisymmetric),
        _holds('dominance-transitive', params, transitive),
    ]


def check_orbit_sizes(length: int) -> List[CheckResult]:
    """orbit_size against direct rearrangement counts on padded partitions of one length."""
    params = {'length': length}
    bad = None
    for k in range(0, length + 1):
        for p in partitions(k, max_length=length):
            lam = p.pad(length)
            if (orbit_size(lam) != sum(1 for _ in distinct_permutations(lam))
                    or multiplicity_partition(lam).size != length):
                bad = lam
                break
        if bad:
            break
    return [_holds('orbit-size', params, bad)]


# ============================================================================
# Suites
# ============================================================================

Task = Tuple[str, Callable[..., List[CheckResult]], Dict[str, Any]]


def build_tasks(suite: Suite, bounds: VerifyBounds) -> List[Task]:
    """The ordered task list of a suite."""
    if suite is Suite.ALL:
        tasks = []
        for part in (Suite.WORDS, Suite.ORBITS, Suite.PERMUTAHEDRON, Suite.RESTRICTION, Suite.ALGORITHMS):
            tasks.extend(build_tasks(part, bounds))
        return tasks

    limit = bounds.enumeration_limit
    ns = range(2, bounds.max_n + 1)
    ms = range(1, bounds.max_m + 1)
    if suite is Suite.WORDS:
        return [('words', check_words, {'m': m, 'n': n, 'limit': limit}) for m in ms for n in ns]
    if suite is Suite.ORBITS:
        tasks = [('orbits', check_orbits, {'m': m, 'n': n, 'limit': limit}) for m in ms for n in ns]
        return tasks + [('orbit-fixtures', check_orbit_fixtures, {})]
    if suite is Suite.PERMUTAHEDRON:
        tasks = [('permutahedron', check_permutahedron, {'n': n, 'limit': limit}) for n in ns]
        return tasks + [('permutahedron-fixtures', check_permutahedron_fixtures, {})]
    if suite is Suite.RESTRICTION:
        tasks = [('restriction', check_restriction, {'n': n}) for n in ns]
        tasks += [('parking-functions', check_parking_functions, {'k': k, 'limit': limit})
                  for k in range(1, bounds.max_n)]
        tasks += [('symfunc', check_symfunc, {'k': k}) for k in range(1, bounds.max_n + 2)]
        return tasks
    if suite is Suite.ALGORITHMS:
        lengths = range(1, bounds.word_length + 1)
        tasks = [('least-rotation', check_least_rotation, {'length': length, 'max_zeros': bounds.word_zeros})
                 for length in lengths]
        tasks += [('lyndon-generation', check_lyndon_generation, {'length': length, 'max_zeros': bounds.word_zeros})
                  for length in lengths]
        tasks += [('dominance', check_dominance_order, {'k': k}) for k in range(1, bounds.partition_size + 1)]
        tasks += [('orbit-size', check_orbit_sizes, {'length': length})
                  for length in range(1, ORBIT_SIZE_MAX_LENGTH + 1)]
        return tasks
    raise ValueError(f'unknown suite {suite}')


def _crashed(label: str, params: Dict[str, Any], error: Exception) -> CheckResult:
    return CheckResult(label, params, 'no error', f'{type(error).__name__}: {error}', False)


def _run_task(task: Task) -> List[CheckResult]:
    label, check, kwargs = task
    params = {key: value for key, value in kwargs.items() if key != 'limit'}
    logger.info(f'Running {label} {params}')
    try:
        return check(**kwargs)
    except ParkhedronError as e:
        logger.error(f'{label} {params} raised {type(e).__name__}: {e}')
        return [_crashed(label, params, e)]
    except Exception as e:
        logger.exception(f'{label} {params} crashed with {type(e).__name__}: {e}')
        return [_crashed(label, params, e)]


def run_verification(suite: Suite, bounds: VerifyBounds, workers: int = 1) -> VerifyReport:
    """
    Run a suite and assemble its report.

    Args:
        suite: Suite to run
        bounds: Parameter ranges
        workers: Thread count; the report order does not depend on it

    Returns:
        VerifyReport with checks in task order
    """
    tasks = build_tasks(suite, bounds)
    logger.info(f'Verifying {suite.value}: {len(tasks)} task(s) on {workers} worker(s)')
    if workers <= 1 or len(tasks) <= 1:
        outcomes = [_run_task(task) for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_task, task) for task in tasks]
            outcomes = [future.result() for future in futures]

    report = VerifyReport(suite=suite.value, bounds=bounds.to_dict())
    for checks in outcomes:
        report.checks.extend(checks)
    logger.info(f'Verification {suite.value}: {len(report.checks) - len(report.failures)}/{len(report.checks)} passed')
    return report
