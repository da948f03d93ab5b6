"""
Logging configuration for parkhedron.
Provides structured logging across the package; output goes to stderr and
an optional rotating file so stdout stays reserved for results.
"""

import logging
import logging.handlers
import os
from pathlib import Path

LOGGER_NAME = 'parkhedron'


def setup_logger(config, level=None):
    """
    Setup logging configuration for the package logger.

    Args:
        config: Configuration class (see parkhedron.config)
        level: Optional level name overriding config.LOG_LEVEL

    Returns:
        The configured 'parkhedron' logger
    """
    logger = logging.getLogger(LOGGER_NAME)

    # Create logs directory if it doesn't exist
    log_file = config.LOG_FILE
    log_dir = os.path.dirname(log_file) if log_file else ''
    if log_dir and not os.path.exists(log_dir):
        Path(log_dir).mkdir(parents=True, exist_ok=True)

    # Repeated setup (tests, nested CLI invocations) must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    level_name = (level or config.LOG_LEVEL).upper()
    log_level = getattr(logging, level_name, logging.WARNING)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # File handler - logs all levels
    if log_file:
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=10 * 1024 * 1024,  # 10MB
            backupCount=10
        )
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    # Console handler on stderr
    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    logger.setLevel(log_level)
    logger.propagate = False

    logger.debug('===== parkhedron logging configured =====')
    logger.debug(f'Environment: {os.environ.get("PARKHEDRON_ENV", "production")}')
    logger.debug(f'Log Level: {level_name}')
    return logger
