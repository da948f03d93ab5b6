"""
parkhedron CLI Module
Command-line interface and verification suites.
"""

from parkhedron.modules.cli.commands import cli

from parkhedron.modules.cli.verify import (
    Suite,
    CheckResult,
    VerifyReport,
    VerifyBounds,
    build_tasks,
    run_verification,
)

__all__ = [
    'cli',
    # Verification
    'Suite',
    'CheckResult',
    'VerifyReport',
    'VerifyBounds',
    'build_tasks',
    'run_verification',
]
