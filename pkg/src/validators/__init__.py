"""
Validation of run configurations.
"""

from .base import BaseValidator, ValidationResult
from .run_config import COMMANDS, RunConfig, RunConfigValidator, build_schema, merge_overrides

__all__ = [
    'BaseValidator',
    'COMMANDS',
    'RunConfig',
    'RunConfigValidator',
    'ValidationResult',
    'build_schema',
    'merge_overrides',
]
