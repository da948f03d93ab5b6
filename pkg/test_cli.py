#!/usr/bin/env python
"""Test script for the parkhedron command-line interface.

Runs every command through click's CliRunner with the testing
configuration and checks output, JSON forms and exit codes.
"""

import json
import sys

import pytest
from click.testing import CliRunner

from parkhedron.config import TestingConfig
from parkhedron.errors import ConsistencyError
from parkhedron.modules.cli import Suite, VerifyBounds, build_tasks, cli, run_verification
from parkhedron.modules.cli import commands, verify

ENV = {'PARKHEDRON_ENV': 'testing'}


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), env=ENV)


def invoke_json(runner, *args):
    result = invoke(runner, *args, '--json')
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


# ============================================================================
# Group
# ============================================================================

def test_version(runner):
    result = invoke(runner, '--version')
    assert result.exit_code == 0
    assert 'parkhedron, version 1.0.0' in result.output


def test_help_lists_commands(runner):
    result = invoke(runner, '--help')
    assert result.exit_code == 0
    for name in ('lyndon', 'orbits', 'transversal', 'frobenius', 'character', 'count', 'ehrhart', 'verify'):
        assert name in result.output


# ============================================================================
# Word tables
# ============================================================================

def test_lyndon_json(runner):
    print("\n=== Testing lyndon ===")
    data = invoke_json(runner, 'lyndon', '-m', '1', '-n', '4')
    assert data['words'] == [
        {'word': '00011101', 'partition': [1, 1, 1, 0], 'runs': [3, 1], 'orbit_size': 4},
        {'word': '00101011', 'partition': [2, 1, 0, 0], 'runs': [2, 1, 1], 'orbit_size': 12},
    ]
    print("✅ Lyndon words of B_{1,4}")


def test_lyndon_table(runner):
    result = invoke(runner, 'lyndon', '-m', '2', '-n', '3')
    assert result.exit_code == 0
    for word in ('001011111', '001111011', '010110111'):
        assert word in result.output
    assert 'Total: 3 word(s), 81 class(es)' in result.output


def test_orbits_json(runner):
    data = invoke_json(runner, 'orbits', '-m', '2', '-n', '3')
    columns = [[''.join(map(str, entry)) for entry in column['entries']] for column in data['columns']]
    assert columns == [
        ['100000', '211111', '222220'],
        ['111100', '222211', '220000'],
        ['211000', '221110', '222100'],
    ]
    print("✅ Shift columns of Y_{2,3}")


def test_transversal(runner):
    data = invoke_json(runner, 'transversal', '-m', '1', '-n', '4')
    assert data['sizes'] == {'3': 2, '7': 3}
    assert data['total'] == 5
    assert len(data['transversals']) == 5

    data = invoke_json(runner, 'transversal', '-m', '2', '-n', '3')
    assert data == {'m': 2, 'n': 3, 'sizes': {}, 'total': 0, 'transversals': []}

    result = invoke(runner, 'transversal', '-m', '2', '-n', '3')
    assert result.exit_code == 0
    assert 'No size-uniform transversal exists' in result.output
    print("✅ Size-uniform transversals")


def test_transversal_limit(runner):
    result = invoke(runner, 'transversal', '-m', '1', '-n', '4', '--limit', '1')
    assert result.exit_code == 0
    assert '... 4 more' in result.output


# ============================================================================
# Frobenius characteristics and characters
# ============================================================================

@pytest.mark.parametrize('args, expected', [
    (('gamma', '-n', '4'), 'h[3,1] + h[2,1,1]'),
    (('gamma', '-n', '4', '--restrict'), 'h[3] + 3 h[2,1] + h[1,1,1]'),
    (('tau-hat', '-m', '1', '-n', '4'), 'h[3,1] + h[2,1,1]'),
    (('tau-hat', '-m', '2', '-n', '3'), 'h[5,1] + h[4,2] + h[3,2,1]'),
    (('pf', '-k', '3'), 'h[3] + 3 h[2,1] + h[1,1,1]'),
])
def test_frobenius(runner, args, expected):
    result = invoke(runner, 'frobenius', *args)
    assert result.exit_code == 0, result.output
    assert result.output == expected + '\n'


def test_frobenius_json(runner):
    data = invoke_json(runner, 'frobenius', 'gamma', '-n', '3')
    assert data == {
        'target': 'gamma',
        'params': {'n': 3},
        'restricted': False,
        'value': {'basis': 'h', 'degree': 3, 'terms': [{'partition': [2, 1], 'num': 1, 'den': 1}]},
    }


@pytest.mark.parametrize('args, expected', [
    (('gamma', '-n', '4', '--mu', '2,1,1'), '4'),
    (('gamma', '-n', '6', '--mu', '2,2,2'), '12'),
    (('gamma', '-n', '4', '--mu', '4'), '0'),
    (('gamma', '-n', '5', '--mu', '1,1,1,1,1'), '125'),
    (('tau-hat', '-m', '2', '-n', '3', '--mu', '1,1,1,1,1,1'), '81'),
    (('pf', '-k', '3', '--mu', '1,1,1'), '16'),
])
def test_character(runner, args, expected):
    result = invoke(runner, 'character', *args)
    assert result.exit_code == 0, result.output
    assert result.output.strip() == expected


def test_character_json_lists_routes(runner):
    data = invoke_json(runner, 'character', 'gamma', '-n', '6', '--mu', '2,2,2')
    assert data['value'] == 12
    assert data['agree'] is True
    assert data['routes'] == {'symfunc': '12', 'search': '12', 'formula': '12'}


def test_character_disagreement_exits_1(runner, monkeypatch):
    monkeypatch.setattr(commands, 'fixed_point_formula', lambda n, mu: 99)
    result = invoke(runner, 'character', 'gamma', '-n', '4', '--mu', '2,1,1')
    assert result.exit_code == 1
    assert 'disagree' in result.output


@pytest.mark.parametrize('args', [
    ('frobenius', 'gamma'),
    ('frobenius', 'pf'),
    ('frobenius', 'gamma', '-n', '1'),
    ('frobenius', 'sigma', '-n', '4'),
    ('character', 'gamma', '-n', '4', '--mu', '2,1'),
    ('character', 'gamma', '-n', '4', '--mu', 'two'),
    ('character', 'gamma', '-n', '4'),
])
def test_usage_errors_exit_2(runner, args):
    assert invoke(runner, *args).exit_code == 2


# ============================================================================
# Counting
# ============================================================================

@pytest.mark.parametrize('args, expected', [
    (('C', '-m', '1', '-n', '4'), 64),
    (('Y', '-m', '1', '-n', '4'), 8),
    (('Y', '-m', '2', '-n', '3'), 9),
    (('lyndon', '-m', '1', '-n', '4'), 2),
    (('lattice', '-n', '5'), 125),
    (('pf', '-k', '3'), 16),
])
def test_count(runner, args, expected):
    result = invoke(runner, 'count', *args)
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0] == str(expected)
    assert 'enumeration: ' in result.output


def test_count_json(runner):
    data = invoke_json(runner, 'count', 'Y', '-m', '1', '-n', '4')
    assert data['formula'] == data['enumeration'] == 8
    assert data['agree'] is True


def test_count_with_residue(runner):
    data = invoke_json(runner, 'count', 'Y', '-m', '1', '-n', '4', '--residue', '0')
    assert data['formula'] is None
    assert data['enumeration'] > 0
    assert invoke(runner, 'count', 'lyndon', '-n', '4', '--residue', '0').exit_code == 2
    print("✅ Non-default residue counts by enumeration only")


def test_count_mismatch_exits_1(runner, monkeypatch):
    monkeypatch.setattr(commands, 'count_Y_formula', lambda spec: 7)
    result = invoke(runner, 'count', 'Y', '-n', '4')
    assert result.exit_code == 1
    assert 'formula 7 but enumeration 8' in result.output


def test_count_requires_parameters(runner):
    assert invoke(runner, 'count', 'C').exit_code == 2
    assert invoke(runner, 'count', 'pf').exit_code == 2


# ============================================================================
# Ehrhart
# ============================================================================

def test_ehrhart_standard(runner):
    data = invoke_json(runner, 'ehrhart', '-n', '3')
    assert data == {'lambda': [2, 1, 0], 'counts': [1, 7, 19], 'polynomial': ['3', '3', '1'], 'volume': 3}

    result = invoke(runner, 'ehrhart', '--lam', '2,1,0', '--t-max', '3')
    assert result.exit_code == 0
    assert 'counts:     1, 7, 19, 37' in result.output
    assert 'volume:     3' in result.output
    print("✅ Ehrhart data of the hexagon")


def test_ehrhart_single_point(runner):
    data = invoke_json(runner, 'ehrhart', '--lam', '1,1,1')
    assert data['counts'] == [1, 1, 1]
    assert data['volume'] is None


def test_ehrhart_simplex_has_fractional_volume(runner):
    data = invoke_json(runner, 'ehrhart', '--lam', '1,0,0')
    assert data['counts'] == [1, 3, 6]
    assert data['polynomial'] == ['1/2', '3/2', '1']
    assert data['volume'] == '1/2'

    result = invoke(runner, 'ehrhart', '--lam', '1,0,0')
    assert result.exit_code == 0, result.output
    assert 'volume:     1/2' in result.output


@pytest.mark.parametrize('args', [(), ('-n', '3', '--lam', '2,1,0')])
def test_ehrhart_needs_one_source(runner, args):
    assert invoke(runner, 'ehrhart', *args).exit_code == 2


# ============================================================================
# Verification
# ============================================================================

def test_verify_words(runner):
    print("\n=== Testing verify ===")
    result = invoke(runner, 'verify', 'words', '--max-n', '4', '--max-m', '1')
    assert result.exit_code == 0, result.output
    assert '✓ count-Y-formula m=1 n=4' in result.output
    assert '✗' not in result.output
    print("✅ verify words passes")


@pytest.mark.parametrize('suite', ['orbits', 'permutahedron', 'restriction'])
def test_verify_suites_pass(runner, suite):
    data = invoke_json(runner, 'verify', suite, '--max-n', '4', '--max-m', '1')
    assert data['suite'] == suite
    assert data['passed'] is True
    assert data['failed'] == 0
    assert data['total'] == len(data['checks']) > 0


@pytest.mark.parametrize('suite', ['words', 'orbits'])
def test_verify_suites_pass_for_m_2(runner, suite):
    data = invoke_json(runner, 'verify', suite, '--max-n', '4', '--max-m', '2')
    assert data['passed'] is True, [c for c in data['checks'] if not c['passed']]
    rotation = [c for c in data['checks'] if c['name'] == 'shift-via-rotation']
    if suite == 'words':
        assert {c['params']['m'] for c in rotation} == {1, 2}


def test_verify_words_default_m_range(runner):
    result = invoke(runner, 'verify', 'words', '--max-n', '3')
    assert result.exit_code == 0, result.output
    assert '✓ shift-via-rotation m=2 n=3' in result.output
    print("✅ verify words passes with the configured m range")


def test_verify_logs_cache_stats_at_debug(runner):
    result = invoke(runner, '--log-level', 'debug', 'verify', 'restriction', '--max-n', '3', '--max-m', '1')
    assert result.exit_code == 0, result.output
    assert 'Cache after verify:' in result.output
    assert "'backend': 'MemoryCache'" in result.output


def test_verify_failure_exits_1(runner, monkeypatch):
    monkeypatch.setattr(verify, 'count_Y_formula', lambda spec: 0)
    result = invoke(runner, 'verify', 'words', '--max-n', '3', '--max-m', '1')
    assert result.exit_code == 1
    assert '✗ First failure: count-Y-formula' in result.output


def test_task_error_becomes_failed_check(monkeypatch):
    def boom(spec):
        raise ConsistencyError('lost a word')

    monkeypatch.setattr(verify, 'count_lyndon_formula', boom)
    bounds = VerifyBounds.from_config(TestingConfig, max_n=2, max_m=1)
    report = run_verification(Suite.WORDS, bounds)
    assert not report.passed
    failure = report.first_failure()
    assert failure.name == 'words'
    assert failure.params == {'m': 1, 'n': 2}
    assert failure.actual == 'ConsistencyError: lost a word'


def test_unexpected_error_keeps_the_rest_of_the_report(monkeypatch):
    original = verify.count_lyndon_formula

    def broken(spec):
        if spec.n == 3:
            raise ZeroDivisionError('division by zero')
        return original(spec)

    monkeypatch.setattr(verify, 'count_lyndon_formula', broken)
    bounds = VerifyBounds.from_config(TestingConfig, max_n=4, max_m=1)
    report = run_verification(Suite.WORDS, bounds, workers=2)
    failures = report.failures
    assert [(c.name, c.params) for c in failures] == [('words', {'m': 1, 'n': 3})]
    assert failures[0].actual == 'ZeroDivisionError: division by zero'
    assert any(c.params == {'m': 1, 'n': 4} and c.passed for c in report.checks)
    print("✅ A crashing task becomes one failed check")


def test_report_order_does_not_depend_on_workers():
    bounds = VerifyBounds.from_config(TestingConfig, max_n=4, max_m=1)
    serial = run_verification(Suite.RESTRICTION, bounds, workers=1)
    pooled = run_verification(Suite.RESTRICTION, bounds, workers=4)
    assert serial.to_dict() == pooled.to_dict()


def test_all_suite_is_the_concatenation():
    bounds = VerifyBounds.from_config(TestingConfig, max_n=3, max_m=1)
    parts = [label for suite in (Suite.WORDS, Suite.ORBITS, Suite.PERMUTAHEDRON, Suite.RESTRICTION, Suite.ALGORITHMS)
             for label, _, _ in build_tasks(suite, bounds)]
    assert [label for label, _, _ in build_tasks(Suite.ALL, bounds)] == parts


def test_output_is_deterministic(runner):
    first = invoke(runner, 'orbits', '-m', '1', '-n', '5')
    second = invoke(runner, 'orbits', '-m', '1', '-n', '5')
    assert first.exit_code == 0
    assert first.output == second.output


def main():
    """Run all tests."""
    print("=" * 50)
    print("PARKHEDRON CLI TEST SUITE")
    print("=" * 50)
    return pytest.main([__file__, '-q'])


if __name__ == '__main__':
    sys.exit(main())
