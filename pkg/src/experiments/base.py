"""
Base class for the reproduction experiments.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from api.writers import ResultTable
from config.experiments import get_preset
from config.settings import Settings
from exceptions import ConfigurationError
from quadrature import MuntzBasisParams


class BaseExperiment(ABC):
    """
    A named, preset-driven computation producing one ResultTable.

    Subclasses set ``experiment_id`` and implement ``execute``; callers
    override preset parameters and the N sweep through ``run``.
    """

    experiment_id: str = ''
    supports_sweep: bool = True

    def __init__(self, threads: Optional[int] = None, settings: Optional[Settings] = None):
        self.preset = get_preset(self.experiment_id)
        self.threads = threads
        self.settings = settings or Settings()

    @property
    def description(self) -> str:
        return self.preset['description']

    def parameters(self, overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Preset parameters with overrides applied.

        Raises:
            ConfigurationError: If an override names a parameter the preset lacks
        """
        params = dict(self.preset['params'])
        unknown = set(overrides or {}) - set(params)
        if unknown:
            raise ConfigurationError(
                f"{self.experiment_id} does not take parameters {sorted(unknown)}; "
                f"available: {sorted(params)}")
        params.update(overrides or {})
        return params

    @staticmethod
    def basis(params: Dict[str, Any], **changes: Any) -> MuntzBasisParams:
        values = {**params, **changes}
        return MuntzBasisParams.create(values['alpha'], values['beta'], values.get('sigma', 1.0),
                                       values.get('eta', 0.0), values.get('mu', 0.0), values['b'])

    def run(self, overrides: Optional[Dict[str, Any]] = None, sweep: Optional[List[int]] = None) -> ResultTable:
        params = self.parameters(overrides)
        if sweep and not self.supports_sweep:
            raise ConfigurationError(f"{self.experiment_id} runs at a single N; set N in the parameters instead of a sweep")
        sweep = list(sweep) if sweep else self.preset.get('sweep')
        table = self.execute(params, sweep)
        table.metadata.setdefault('experiment', self.experiment_id)
        table.metadata.setdefault('params', params)
        if sweep:
            table.metadata.setdefault('sweep', sweep)
        return table

    @abstractmethod
    def execute(self, params: Dict[str, Any], sweep: Optional[List[int]]) -> ResultTable:
        """Carry out the experiment."""
