"""
Library and CLI defaults loaded from config/config.json.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

from exceptions import ConfigurationError
from utils.parallel import thread_cap

logger = logging.getLogger(__name__)

CONFIG_DIR_ENV = 'MUNTZ_SPECTRAL_CONFIG_DIR'
app_root = Path(__file__).parent.parent.parent


@dataclass
class LoggingSettings:
    level: str = 'WARNING'
    format: str = '[%(levelname)s] %(name)s: %(message)s'


@dataclass
class SolverSettings:
    newton_tol: float = 1e-11
    newton_max_iter: int = 50
    newton_max_halvings: int = 8
    time_rtol: float = 1e-10
    time_atol: float = 1e-10


@dataclass
class BurgersSettings:
    epsilon: float = 0.1
    dt: float = 1e-3
    newton_tol: float = 1e-10
    newton_max_iter: int = 25
    max_halvings: int = 10


@dataclass
class OutputSettings:
    format: str = 'csv'
    precision: int = 17


@dataclass
class Settings:
    logging: LoggingSettings = field(default_factory=LoggingSettings)
    solver: SolverSettings = field(default_factory=SolverSettings)
    burgers: BurgersSettings = field(default_factory=BurgersSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    threads: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


SECTIONS = {
    'logging': LoggingSettings,
    'solver': SolverSettings,
    'burgers': BurgersSettings,
    'output': OutputSettings,
}


def config_file() -> Path:
    """config.json under MUNTZ_SPECTRAL_CONFIG_DIR, or the project's config directory."""
    override = os.environ.get(CONFIG_DIR_ENV)
    base = Path(override) if override else app_root / "config"
    return base / "config.json"


def _section(name: str, cls, values: Any):
    if not isinstance(values, dict):
        raise ConfigurationError(f"settings section '{name}' must be an object")
    try:
        return cls(**values)
    except TypeError as exc:
        raise ConfigurationError(f"invalid keys in settings section '{name}': {exc}") from exc


def load_settings(path: Optional[Path] = None) -> Settings:
    """
    Load settings; a missing file yields the built-in defaults.

    Raises:
        ConfigurationError: If the file is unreadable or has unknown sections or keys
    """
    path = Path(path) if path is not None else config_file()
    if not path.exists():
        logger.debug("no settings file at %s, using defaults", path)
        data: Dict[str, Any] = {}
    else:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (json.JSONDecodeError, IOError) as exc:
            raise ConfigurationError(f"cannot read settings file {path}: {exc}") from exc

    unknown = set(data) - set(SECTIONS) - {'threads'}
    if unknown:
        raise ConfigurationError(f"unknown settings sections: {sorted(unknown)}")

    settings = Settings(**{name: _section(name, cls, data[name]) for name, cls in SECTIONS.items() if name in data})
    settings.threads = thread_cap(data.get('threads'))
    return settings
