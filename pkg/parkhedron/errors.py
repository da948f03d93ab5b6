"""
Error types for parkhedron.
Defines the exception hierarchy and how each error surfaces on the command line.
"""

import functools
import logging

import click

logger = logging.getLogger(__name__)


# ============================================================================
# Exception Hierarchy
# ============================================================================

class ParkhedronError(Exception):
    """Base class for every error raised by parkhedron."""


class DomainError(ParkhedronError, ValueError):
    """An argument violates an operation's precondition."""


class DegeneratePolytopeError(DomainError):
    """A permutahedron has dimension zero where a positive dimension is needed."""


class UnsupportedParameterError(ParkhedronError):
    """The parameters are valid but the operation is only proved for a narrower case."""


class ParseError(ParkhedronError, ValueError):
    """Malformed symmetric-function text."""

    def __init__(self, message, position):
        super().__init__(f'{message} at position {position}')
        self.position = position


class ConsistencyError(ParkhedronError):
    """A formula produced a non-integral or self-contradictory value."""


class ConfigurationError(ParkhedronError):
    """An environment setting could not be interpreted."""


class VerificationFailure(ParkhedronError):
    """One or more verification checks failed."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# ============================================================================
# Command-line surface
# ============================================================================

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def exit_code_for(error):
    """
    Map an exception to a process exit code.

    Args:
        error: Exception instance

    Returns:
        1 for verification and consistency failures, 2 for usage-class errors
    """
    if isinstance(error, (VerificationFailure, ConsistencyError)):
        return EXIT_FAILURE
    if isinstance(error, (DomainError, UnsupportedParameterError, ParseError,
                          ConfigurationError, click.UsageError)):
        return EXIT_USAGE
    return EXIT_FAILURE


def handle_errors(command):
    """
    Decorate a click command so library errors become clean exits.

    Usage-class errors are re-raised as click.UsageError (exit code 2);
    failures print their message to stderr and exit with code 1.
    """

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ParkhedronError as e:
            code = exit_code_for(e)
            if code == EXIT_USAGE:
                logger.warning(f'Usage error: {e}')
                raise click.UsageError(str(e))
            logger.error(f'{type(e).__name__}: {e}')
            click.echo(click.style(f'✗ {e}', fg='red'), err=True)
            raise click.exceptions.Exit(code)

    return wrapper
