"""
CLI Commands - Batch command-line interface for parkhedron

Provides commands for:
- Word tables (lyndon, orbits, transversal)
- Symmetric functions and characters (frobenius, character)
- Counting with formula and enumeration side by side (count)
- Lattice-point counts of dilates (ehrhart)
- Self-verification suites (verify)

Results go to stdout; logs and error messages go to stderr.
"""

import json
import logging
from typing import Any, Dict, Optional

import click

from parkhedron.cache import configure_default_cache, get_default_cache
from parkhedron.classical import enumerate_parking_functions, frobenius_pf
from parkhedron.config import PARKHEDRON_VERSION, get_config, worker_count
from parkhedron.core import CycleType, PaddedPartition, orbit_size, runs_of_ones
from parkhedron.errors import EXIT_FAILURE, VerificationFailure, handle_errors
from parkhedron.logger import setup_logger
from parkhedron.modules.cli.verify import Suite, VerifyBounds, run_verification
from parkhedron.parking_space import (
    CmnSpec,
    class_representatives,
    count_C,
    count_classes,
    count_lyndon_formula,
    count_Y_formula,
    enumerate_B_lyndon,
    enumerate_C,
    enumerate_Y,
    fixed_points_direct,
    frobenius_tau_hat,
    lyndon_partitions,
    orbit_fixed_points,
    shift_columns,
    uniform_size_sizes,
    uniform_size_transversals,
)
from parkhedron.permutahedron import (
    PermutahedronSpec,
    delta,
    ehrhart_counts,
    ehrhart_polynomial,
    fixed_point_count,
    fixed_point_formula,
    frobenius_gamma,
    lattice_point_count,
    normalized_volume,
    standard,
)
from parkhedron.symfunc import SymFunc, character, format_symfunc, restrict, to_json

logger = logging.getLogger(__name__)

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
TARGETS = ['tau-hat', 'gamma', 'pf']

# Direct fixed-point counting over class representatives stays below this N
DIRECT_CHARACTER_MAX_N = 8


# ============================================================================
# Helpers
# ============================================================================

def _emit_json(data: Dict[str, Any]) -> None:
    click.echo(json.dumps(data, indent=2))


def _require(value: Optional[int], flag: str, what: str) -> int:
    if value is None:
        raise click.UsageError(f'{what} needs {flag}')
    return value


def _plain_rational(value):
    """An exact rational as a JSON integer, or as "p/q" text when not integral."""
    if value is None:
        return None
    return value.numerator if value.denominator == 1 else str(value)


def _header(title: str) -> None:
    click.echo(click.style(title, fg='cyan', bold=True))
    click.echo('=' * 60)


def _config(ctx: click.Context):
    return ctx.obj if ctx.obj is not None else get_config()


def _frobenius(target: str, m: int, n: Optional[int], k: Optional[int]):
    """The Frobenius characteristic named on the command line, with its parameters."""
    if target == 'tau-hat':
        n = _require(n, '-n', 'tau-hat')
        return frobenius_tau_hat(CmnSpec(m, n)), {'m': m, 'n': n}
    if target == 'gamma':
        n = _require(n, '-n', 'gamma')
        return frobenius_gamma(n), {'n': n}
    k = _require(k, '-k', 'pf')
    return frobenius_pf(k), {'k': k}


# ============================================================================
# Command group
# ============================================================================

@click.group()
@click.version_option(PARKHEDRON_VERSION, prog_name='parkhedron')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help='Override LOG_LEVEL for this run')
@click.pass_context
@handle_errors
def cli(ctx, log_level):
    """Exact combinatorics of parking spaces, shift quotients and the trimmed permutahedron."""
    config = get_config()
    setup_logger(config, log_level)
    configure_default_cache(config.CACHE_BACKEND)
    ctx.obj = config


# ============================================================================
# Word tables
# ============================================================================

@cli.command()
@click.option('-m', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('-n', type=click.IntRange(min=2), required=True)
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@handle_errors
def lyndon(m, n, as_json):
    """List the Lyndon words of B_{m,n} with their partitions."""
    spec = CmnSpec(m, n)
    rows = []
    for w, lam in lyndon_partitions(spec):
        rows.append({
            'word': str(w),
            'partition': list(lam.parts),
            'runs': list(runs_of_ones(w).parts),
            'orbit_size': orbit_size(lam),
        })
    logger.info(f'{len(rows)} Lyndon word(s) for {spec}')

    if as_json:
        _emit_json({'m': m, 'n': n, 'words': rows})
        return

    _header(f'Lyndon words of B (m={m}, n={n})')
    click.echo(f"{'word':<{spec.word_length + 2}}{'partition':<{3 * spec.N + 4}}{'runs':<{3 * spec.N + 4}}orbit")
    for row in rows:
        partition = str(PaddedPartition(tuple(row['partition'])))
        runs = ','.join(str(part) for part in row['runs'])
        click.echo(f"{row['word']:<{spec.word_length + 2}}{partition:<{3 * spec.N + 4}}"
                   f"{runs:<{3 * spec.N + 4}}{row['orbit_size']}")
    click.echo('=' * 60)
    click.echo(f'Total: {len(rows)} word(s), {sum(row["orbit_size"] for row in rows)} class(es)')


@cli.command()
@click.option('-m', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('-n', type=click.IntRange(min=2), required=True)
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@handle_errors
def orbits(m, n, as_json):
    """Print Y_{m,n} as shift columns, one per Lyndon word."""
    spec = CmnSpec(m, n)
    columns = shift_columns(spec)

    if as_json:
        _emit_json({
            'm': m,
            'n': n,
            'columns': [
                {'word': str(column.word), 'entries': [list(entry.parts) for entry in column.entries]}
                for column in columns
            ],
        })
        return

    _header(f'Shift columns of Y (m={m}, n={n})')
    width = max(len(str(entry)) for column in columns for entry in column.entries) + 2
    click.echo(f"{'j':<4}" + ''.join(f'{str(column.word):<{max(width, spec.word_length + 2)}}' for column in columns))
    for j in range(n):
        cells = ''.join(
            f'{str(column.entries[j]) + " (" + str(column.entries[j].size) + ")":<{max(width, spec.word_length + 2)}}'
            for column in columns
        )
        click.echo(f'{j:<4}{cells}')
    click.echo('=' * 60)
    click.echo(f'Total: {len(columns)} column(s), {len(columns) * n} partition(s)')


@cli.command()
@click.option('-m', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('-n', type=click.IntRange(min=2), required=True)
@click.option('--limit', type=click.IntRange(min=0), default=20, show_default=True,
              help='Transversals to list')
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@handle_errors
def transversal(m, n, limit, as_json):
    """Report choices of one partition per shift column with all sizes equal."""
    spec = CmnSpec(m, n)
    sizes = uniform_size_sizes(spec)
    listed = []
    for choice in uniform_size_transversals(spec):
        if len(listed) >= limit:
            break
        listed.append(choice)
    total = sum(sizes.values())

    if as_json:
        _emit_json({
            'm': m,
            'n': n,
            'sizes': {str(size): count for size, count in sizes.items()},
            'total': total,
            'transversals': [[list(lam.parts) for lam in choice] for choice in listed],
        })
        return

    _header(f'Size-uniform transversals (m={m}, n={n})')
    if not sizes:
        click.echo(click.style('No size-uniform transversal exists', fg='yellow'))
        return
    for size, count in sizes.items():
        click.echo(f'size {size}: {count} transversal(s)')
    for choice in listed:
        click.echo('  ' + ' '.join(str(lam) for lam in choice))
    if total > len(listed):
        click.echo(f'  ... {total - len(listed)} more')


# ============================================================================
# Symmetric functions
# ============================================================================

@cli.command()
@click.argument('target', type=click.Choice(TARGETS))
@click.option('-m', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('-n', type=click.IntRange(min=2), default=None)
@click.option('-k', type=click.IntRange(min=1), default=None)
@click.option('--restrict', 'restricted', is_flag=True, help='Restrict from S_N to S_{N-1}')
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@handle_errors
def frobenius(target, m, n, k, restricted, as_json):
    """Print the Frobenius characteristic of tau-hat, gamma or pf."""
    f, params = _frobenius(target, m, n, k)
    if restricted:
        f = restrict(f)
    logger.info(f'Frobenius {target} {params} restricted={restricted}: {len(f.terms)} term(s)')

    if as_json:
        _emit_json({'target': target, 'params': params, 'restricted': restricted, 'value': to_json(f)})
        return
    click.echo(format_symfunc(f))


def _character_routes(target: str, f: SymFunc, params: Dict[str, int], mu: CycleType) -> Dict[str, int]:
    """Every available way of computing the character at mu."""
    value = character(f, mu)
    routes = {'symfunc': value}
    if target == 'gamma':
        routes['search'] = fixed_point_count(params['n'], mu)
        routes['formula'] = fixed_point_formula(params['n'], mu)
    elif target == 'tau-hat':
        spec = CmnSpec(params['m'], params['n'])
        routes['orbits'] = sum(orbit_fixed_points(lam, mu) for _, lam in lyndon_partitions(spec))
        if spec.N < DIRECT_CHARACTER_MAX_N:
            routes['direct'] = fixed_points_direct(class_representatives(spec), mu)
    else:
        routes['direct'] = fixed_points_direct(enumerate_parking_functions(params['k']), mu)
    return routes


@cli.command(name='character')
@click.argument('target', type=click.Choice(TARGETS))
@click.option('--mu', required=True, help="Cycle type, e.g. '2,1,1'")
@click.option('-m', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('-n', type=click.IntRange(min=2), default=None)
@click.option('-k', type=click.IntRange(min=1), default=None)
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@handle_errors
def character_command(target, mu, m, n, k, as_json):
    """Print a character value, cross-checked against direct counting."""
    f, params = _frobenius(target, m, n, k)
    cycle_type = CycleType.parse(mu)
    routes = _character_routes(target, f, params, cycle_type)
    value = routes['symfunc']
    agree = len(set(routes.values())) == 1

    if as_json:
        _emit_json({
            'target': target,
            'params': params,
            'mu': list(cycle_type.parts),
            'value': _plain_rational(value),
            'routes': {name: str(result) for name, result in routes.items()},
            'agree': agree,
        })
    else:
        click.echo(str(value))

    if not agree:
        detail = ', '.join(f'{name}={result}' for name, result in routes.items())
        raise VerificationFailure(f'character routes disagree at mu={cycle_type}: {detail}')


# ============================================================================
# Counting
# ============================================================================

def _count_values(what: str, m: int, n: Optional[int], k: Optional[int],
                  residue: Optional[int], limit: int):
    """(formula, enumeration, label); enumeration is None when it would exceed limit."""
    if what in ('C', 'Y', 'lyndon'):
        spec = CmnSpec(m, _require(n, '-n', what), residue)
        if what == 'C':
            formula = count_C(spec)
            enumerated = sum(1 for _ in enumerate_C(spec)) if formula <= limit else None
        elif what == 'Y':
            formula = count_Y_formula(spec) if spec.is_default else None
            estimate = count_classes(spec)
            enumerated = sum(1 for _ in enumerate_Y(spec)) if estimate <= limit else None
        else:
            formula = count_lyndon_formula(spec)
            enumerated = sum(1 for _ in enumerate_B_lyndon(spec)) if count_classes(spec) <= limit else None
        return formula, enumerated, str(spec)
    if what == 'lattice':
        n = _require(n, '-n', what)
        return n ** (n - 2), lattice_point_count(PermutahedronSpec(delta(n))), f'P(delta_{n})'
    k = _require(k, '-k', what)
    formula = (k + 1) ** (k - 1)
    enumerated = sum(1 for _ in enumerate_parking_functions(k)) if formula <= limit else None
    return formula, enumerated, f'k={k}'


@cli.command()
@click.argument('what', type=click.Choice(['C', 'Y', 'lyndon', 'lattice', 'pf']))
@click.option('-m', type=click.IntRange(min=1), default=1, show_default=True)
@click.option('-n', type=click.IntRange(min=2), default=None)
@click.option('-k', type=click.IntRange(min=1), default=None)
@click.option('--residue', type=click.IntRange(min=0), default=None,
              help='Coordinate-sum residue modulo n (default c_{m,n})')
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@click.pass_context
@handle_errors
def count(ctx, what, m, n, k, residue, as_json):
    """Count C, Y, Lyndon words, lattice points or parking functions."""
    config = _config(ctx)
    formula, enumerated, label = _count_values(what, m, n, k, residue, config.ENUMERATION_LIMIT)
    agree = formula is None or enumerated is None or formula == enumerated

    if as_json:
        _emit_json({'what': what, 'params': label, 'formula': formula, 'enumeration': enumerated, 'agree': agree})
    else:
        click.echo(str(formula if formula is not None else enumerated))
        click.echo(f'  {what} for {label}', err=True)
        click.echo(f'  formula:     {formula if formula is not None else "n/a"}', err=True)
        click.echo(f'  enumeration: {enumerated if enumerated is not None else "skipped"}', err=True)

    if not agree:
        raise VerificationFailure(f'{what} for {label}: formula {formula} but enumeration {enumerated}')


# ============================================================================
# Ehrhart
# ============================================================================

@cli.command()
@click.option('--lam', default=None, help="Vertex, e.g. '2,1,0'")
@click.option('-n', type=click.IntRange(min=1), default=None, help='Use the standard permutahedron (n-1, ..., 0)')
@click.option('--t-max', type=click.IntRange(min=0), default=None, help='Last dilate to count (default n-1)')
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON')
@handle_errors
def ehrhart(lam, n, t_max, as_json):
    """Dilate counts, Ehrhart polynomial and normalized volume of a permutahedron."""
    if (lam is None) == (n is None):
        raise click.UsageError('give exactly one of --lam and -n')
    vertex = PaddedPartition.parse(lam) if lam is not None else standard(n)
    spec = PermutahedronSpec(vertex)
    counts = ehrhart_counts(spec, spec.n - 1 if t_max is None else t_max)
    polynomial = ehrhart_polynomial(spec)
    volume = None if spec.is_constant else normalized_volume(spec)

    if as_json:
        _emit_json({
            'lambda': list(spec.lam.parts),
            'counts': counts,
            'polynomial': [str(c) for c in polynomial.all_coeffs()],
            'volume': _plain_rational(volume),
        })
        return

    _header(f'Ehrhart data of {spec}')
    click.echo(f'counts:     {", ".join(str(c) for c in counts)}')
    click.echo(f'polynomial: {polynomial.as_expr()}')
    click.echo(f'volume:     {volume if volume is not None else "n/a (single point)"}')


# ============================================================================
# Verification
# ============================================================================

def _echo_report(report) -> None:
    _header(f'Verification: {report.suite}')
    for check in report.checks:
        mark = click.style('✓', fg='green') if check.passed else click.style('✗', fg='red', bold=True)
        params = ' '.join(f'{key}={value}' for key, value in check.params.items())
        click.echo(f'{mark} {check.name} {params}'.rstrip())
    click.echo('=' * 60)
    failed = len(report.failures)
    summary = f'{len(report.checks) - failed}/{len(report.checks)} check(s) passed'
    click.echo(click.style(summary, fg='green' if not failed else 'red', bold=True))


@cli.command()
@click.argument('suite', type=click.Choice([s.value for s in Suite]), default=Suite.ALL.value)
@click.option('--max-n', type=click.IntRange(min=2), default=None, help='Largest n (default from config)')
@click.option('--max-m', type=click.IntRange(min=1), default=None, help='Largest m (default from config)')
@click.option('--json', 'as_json', is_flag=True, help='Emit the report as JSON')
@click.pass_context
@handle_errors
def verify(ctx, suite, max_n, max_m, as_json):
    """Run a verification suite; exit 1 if any check fails."""
    config = _config(ctx)
    bounds = VerifyBounds.from_config(config, max_n, max_m)
    report = run_verification(Suite(suite), bounds, worker_count(config))
    logger.debug(f"Cache after verify: {get_default_cache().get_stats()}")

    if as_json:
        _emit_json(report.to_dict())
    else:
        _echo_report(report)

    failure = report.first_failure()
    if failure is not None:
        click.echo(click.style(
            f'✗ First failure: {failure.name} {failure.params}: expected {failure.expected}, got {failure.actual}',
            fg='red'), err=True)
        raise click.exceptions.Exit(EXIT_FAILURE)
