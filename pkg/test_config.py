#!/usr/bin/env python
"""Test script for configuration, logging and error handling."""

import logging
import sys

import click
import pytest
from click.testing import CliRunner

from parkhedron.config import (
    Config,
    DevelopmentConfig,
    ProductionConfig,
    TestingConfig,
    get_config,
    worker_count,
)
from parkhedron.errors import (
    EXIT_FAILURE,
    EXIT_USAGE,
    ConfigurationError,
    ConsistencyError,
    DegeneratePolytopeError,
    DomainError,
    ParseError,
    UnsupportedParameterError,
    VerificationFailure,
    exit_code_for,
    handle_errors,
)
from parkhedron.logger import LOGGER_NAME, setup_logger


# ============================================================================
# Configuration
# ============================================================================

def test_get_config(monkeypatch):
    print("\n=== Testing Configuration Selection ===")
    monkeypatch.delenv('PARKHEDRON_ENV', raising=False)
    assert get_config() is ProductionConfig
    monkeypatch.setenv('PARKHEDRON_ENV', 'testing')
    assert get_config() is TestingConfig
    monkeypatch.setenv('PARKHEDRON_ENV', 'development')
    assert get_config() is DevelopmentConfig
    monkeypatch.setenv('PARKHEDRON_ENV', 'staging')
    assert get_config() is ProductionConfig
    print("✅ PARKHEDRON_ENV selects the configuration class")


def test_defaults():
    assert Config.VERIFY_MAX_N == 7
    assert Config.VERIFY_MAX_M == 2
    assert Config.VERIFY_WORD_LENGTH == 16
    assert Config.VERIFY_WORD_ZEROS == 6
    assert TestingConfig.THREADS == 1
    assert TestingConfig.VERIFY_MAX_N < Config.VERIFY_MAX_N


def test_worker_count(monkeypatch):
    print("\n=== Testing Worker Count ===")
    monkeypatch.setenv('PARKHEDRON_THREADS', '3')
    assert worker_count(ProductionConfig) == 3
    assert worker_count(TestingConfig) == 1, "Testing ignores the environment"

    monkeypatch.setenv('PARKHEDRON_THREADS', '0')
    assert worker_count(ProductionConfig) >= 1

    monkeypatch.delenv('PARKHEDRON_THREADS')
    assert worker_count(ProductionConfig) >= 1

    for bad in ('many', '-2', '1.5'):
        monkeypatch.setenv('PARKHEDRON_THREADS', bad)
        with pytest.raises(ConfigurationError):
            worker_count(ProductionConfig)
    print("✅ PARKHEDRON_THREADS is validated")


# ============================================================================
# Logging
# ============================================================================

def test_setup_logger_does_not_stack_handlers():
    logger = setup_logger(TestingConfig)
    setup_logger(TestingConfig)
    assert logger.name == LOGGER_NAME
    assert len(logger.handlers) == 1
    assert logger.level == logging.WARNING
    assert not logger.propagate

    setup_logger(TestingConfig, level='debug')
    assert logger.level == logging.DEBUG
    print("✅ Logger configured once per call")


def test_setup_logger_file_handler(tmp_path):
    class FileConfig(TestingConfig):
        LOG_FILE = str(tmp_path / 'logs' / 'parkhedron.log')

    logger = setup_logger(FileConfig, level='INFO')
    assert len(logger.handlers) == 2
    logger.info('written to file')
    for handler in logger.handlers:
        handler.flush()
    assert 'written to file' in (tmp_path / 'logs' / 'parkhedron.log').read_text()
    setup_logger(TestingConfig)
    print("✅ Rotating file handler writes to LOG_FILE")


# ============================================================================
# Error handling
# ============================================================================

@pytest.mark.parametrize('error, code', [
    (DomainError('bad n'), EXIT_USAGE),
    (DegeneratePolytopeError('point'), EXIT_USAGE),
    (UnsupportedParameterError('residue'), EXIT_USAGE),
    (ParseError('bad token', 3), EXIT_USAGE),
    (ConfigurationError('threads'), EXIT_USAGE),
    (ConsistencyError('odd'), EXIT_FAILURE),
    (VerificationFailure('mismatch'), EXIT_FAILURE),
])
def test_exit_code_for(error, code):
    assert exit_code_for(error) == code


def test_parse_error_keeps_position():
    error = ParseError('unexpected token', 7)
    assert error.position == 7
    assert 'position 7' in str(error)
    assert isinstance(error, ValueError)


def test_handle_errors_maps_exit_codes():
    @click.command()
    @click.argument('kind')
    @handle_errors
    def command(kind):
        if kind == 'domain':
            raise DomainError('n must be >= 2')
        if kind == 'failure':
            raise VerificationFailure('routes disagree')
        click.echo('ok')

    runner = CliRunner()
    result = runner.invoke(command, ['fine'])
    assert result.exit_code == 0 and result.output == 'ok\n'

    result = runner.invoke(command, ['domain'])
    assert result.exit_code == 2
    assert 'n must be >= 2' in result.output

    result = runner.invoke(command, ['failure'])
    assert result.exit_code == 1
    assert '✗ routes disagree' in result.output
    print("✅ Errors become exit codes 1 and 2")


def main():
    """Run all tests."""
    print("=" * 50)
    print("PARKHEDRON CONFIGURATION TEST SUITE")
    print("=" * 50)
    return pytest.main([__file__, '-q'])


if __name__ == '__main__':
    sys.exit(main())
