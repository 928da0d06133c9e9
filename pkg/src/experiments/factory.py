"""
Factory for creating experiment instances.
"""

from typing import Dict, List, Optional, Type

from config.settings import Settings
from exceptions import ConfigurationError

from .base import BaseExperiment
from .derivatives import LeftMatrixExperiment, RightMatrixExperiment
from .odes import CauchyEulerExperiment, RiccatiExperiment, SecondOrderExperiment
from .pdes import BurgersExperiment, FractionalPdeExperiment


class ExperimentFactory:
    """Factory class for creating experiment instances."""

    # Registry mapping experiment ids to implementation classes
    _registry: Dict[str, Type[BaseExperiment]] = {
        'ex1': LeftMatrixExperiment,
        'ex2': RightMatrixExperiment,
        'ex3': CauchyEulerExperiment,
        'ex4': SecondOrderExperiment,
        'riccati': RiccatiExperiment,
        'pde': FractionalPdeExperiment,
        'burgers': BurgersExperiment,
    }

    @classmethod
    def get_available_types(cls) -> List[str]:
        return list(cls._registry.keys())

    @classmethod
    def create(cls, experiment_id: str, threads: Optional[int] = None,
               settings: Optional[Settings] = None) -> BaseExperiment:
        """
        Create an experiment instance.

        Raises:
            ConfigurationError: If the id is not registered
        """
        key = experiment_id.lower()
        if key not in cls._registry:
            available_types = ', '.join(cls.get_available_types())
            raise ConfigurationError(
                f"Unsupported experiment: {experiment_id}. "
                f"Available types: {available_types}"
            )
        return cls._registry[key](threads=threads, settings=settings)
