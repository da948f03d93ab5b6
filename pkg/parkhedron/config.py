"""
Configuration management for parkhedron.
Supports environment-based configuration for different run modes.
"""

import os

from parkhedron.errors import ConfigurationError


# Application version
PARKHEDRON_VERSION = '1.0.0'


def _env_int(name, default):
    """
    Read a non-negative integer from the environment.

    Args:
        name: Environment variable name
        default: Value used when the variable is unset or empty

    Returns:
        Parsed integer

    Raises:
        ConfigurationError: If the value is not a non-negative integer
    """
    raw = os.environ.get(name, '').strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f'{name} must be an integer, got {raw!r}')
    if value < 0:
        raise ConfigurationError(f'{name} must be >= 0, got {value}')
    return value


class Config:
    """Base configuration class with common settings."""

    DEBUG = False
    TESTING = False

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')
    LOG_FILE = os.environ.get('LOG_FILE', '')

    # Verification workers (0 = one per CPU); PARKHEDRON_THREADS overrides
    THREADS = 0

    # Default verification bounds
    VERIFY_MAX_N = 7
    VERIFY_MAX_M = 2

    # Algorithm cross-checks: words up to this length with at most this many 0s
    VERIFY_WORD_LENGTH = 16
    VERIFY_WORD_ZEROS = 6

    # Dominance order is checked on all partitions up to this size
    VERIFY_PARTITION_SIZE = 10

    # Exhaustive point enumerations larger than this are skipped
    ENUMERATION_LIMIT = 3_000_000

    # Basis-conversion table cache
    CACHE_BACKEND = os.environ.get('CACHE_BACKEND', 'memory').lower()


class DevelopmentConfig(Config):
    """Development configuration."""

    DEBUG = True
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Production configuration, used by the command-line tool."""

    DEBUG = False
    TESTING = False


class TestingConfig(Config):
    """Testing configuration: serial workers, quiet logs, small bounds."""

    DEBUG = True
    TESTING = True
    THREADS = 1
    LOG_LEVEL = 'WARNING'
    LOG_FILE = ''
    VERIFY_MAX_N = 5
    VERIFY_MAX_M = 2
    VERIFY_WORD_LENGTH = 10
    VERIFY_WORD_ZEROS = 4
    VERIFY_PARTITION_SIZE = 6
    ENUMERATION_LIMIT = 200_000


def get_config():
    """
    Get configuration based on environment.

    Environment variable: PARKHEDRON_ENV
    - 'development': DevelopmentConfig
    - 'testing': TestingConfig
    - 'production' or default: ProductionConfig
    """
    env = os.environ.get('PARKHEDRON_ENV', 'production')

    config_map = {
        'production': ProductionConfig,
        'testing': TestingConfig,
        'development': DevelopmentConfig,
    }

    return config_map.get(env, ProductionConfig)


def worker_count(config):
    """
    Resolve the number of verification workers.

    PARKHEDRON_THREADS takes precedence outside of testing.

    Args:
        config: Configuration class

    Returns:
        Positive worker count

    Raises:
        ConfigurationError: If PARKHEDRON_THREADS is malformed
    """
    if config.TESTING:
        threads = config.THREADS
    else:
        threads = _env_int('PARKHEDRON_THREADS', config.THREADS)
    if threads == 0:
        threads = os.cpu_count() or 1
    return threads
