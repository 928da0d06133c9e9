"""
Reproductions of the published numerical experiments.
"""

from .base import BaseExperiment
from .factory import ExperimentFactory

__all__ = ['BaseExperiment', 'ExperimentFactory']
