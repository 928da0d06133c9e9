"""
Run-configuration schema and validator.

A run configuration names one command, its parameters, an optional N sweep
and the output target:

    command: solve-linear
    params: {alpha: -0.5, beta: 1, sigma: 0.5, eta: -1, b: 10, orders: [1], ...}
    sweep: [10, 20, 30]
    output: {path: out.csv, format: csv}
"""

import copy
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import jsonschema

from config.experiments import EXPERIMENTS, get_preset
from quadrature import MuntzBasisParams

from .base import BaseValidator, ValidationResult

logger = logging.getLogger(__name__)

NUMBER = {"type": "number"}
POSITIVE = {"type": "number", "exclusiveMinimum": 0}
COUNT = {"type": "integer", "minimum": 0}
EXPRESSION = {"type": ["string", "number"]}
ORDERS = {"type": "array", "items": POSITIVE, "minItems": 1}

BASIS_KEYS = {
    "alpha": NUMBER,
    "beta": NUMBER,
    "sigma": POSITIVE,
    "eta": NUMBER,
    "mu": {"type": "number", "minimum": 0},
    "b": POSITIVE,
}

COMMAND_PARAMS: Dict[str, Dict[str, Any]] = {
    "quad": {"n": COUNT, "variant": {"enum": [0, 1, 2]}},
    "basis": {
        "kind": {"enum": ["jmf1", "jmf2", "lmf1", "lmf2", "h"]},
        "index": COUNT, "n": COUNT, "points": {"type": "integer", "minimum": 2},
        "limit": {"type": "boolean"},
    },
    "diffmat": {
        "side": {"enum": ["left", "right"]},
        "approach": {"enum": ["stable", "direct"]},
        "order": POSITIVE, "n": COUNT, "degree": COUNT,
        "emit": {"enum": ["matrix", "summary"]},
    },
    "interp": {
        "kind": {"enum": ["mji", "njmi1", "njmi2"]},
        "function": EXPRESSION, "n": COUNT, "points": {"type": "integer", "minimum": 2},
    },
    "solve-linear": {
        "orders": ORDERS, "coefficients": {"type": "array", "items": EXPRESSION},
        "rhs": EXPRESSION, "exact": EXPRESSION, "n": COUNT,
        "points": {"type": "integer", "minimum": 2},
    },
    "solve-nonlinear": {
        "orders": ORDERS, "rhs": EXPRESSION, "exact": EXPRESSION, "n": COUNT,
        "points": {"type": "integer", "minimum": 2},
    },
    "solve-pde": {
        "order": POSITIVE, "d": EXPRESSION, "source": EXPRESSION, "initial": EXPRESSION,
        "exact": EXPRESSION, "n": COUNT, "T": POSITIVE, "times": {"type": "integer", "minimum": 2},
        "rtol": POSITIVE, "atol": POSITIVE,
    },
    "solve-burgers": {
        "epsilon": POSITIVE, "source": EXPRESSION, "initial": EXPRESSION, "exact": EXPRESSION,
        "n": COUNT, "T": POSITIVE, "dt": POSITIVE, "times": {"type": "integer", "minimum": 2},
    },
}


def _experiment_params() -> Dict[str, Any]:
    keys: Dict[str, Any] = {"experiment": {"enum": [e["id"] for e in EXPERIMENTS]}}
    for preset in EXPERIMENTS:
        for key, value in preset["params"].items():
            if isinstance(value, list):
                keys.setdefault(key, {"type": "array", "items": NUMBER})
            elif isinstance(value, int) and not isinstance(value, bool) and key in ("N", "degree", "points", "times"):
                keys.setdefault(key, COUNT)
            else:
                keys.setdefault(key, NUMBER)
    return keys


COMMAND_PARAMS["paper-repro"] = _experiment_params()
COMMANDS = sorted(COMMAND_PARAMS)


def build_schema() -> Dict[str, Any]:
    """Draft 7 schema: one branch per command, unknown keys rejected everywhere."""
    branches = []
    for command, keys in COMMAND_PARAMS.items():
        properties = dict(keys)
        if command != "paper-repro":
            properties = {**BASIS_KEYS, **properties}
        branches.append({
            "if": {"properties": {"command": {"const": command}}},
            "then": {"properties": {"params": {
                "type": "object", "properties": properties, "additionalProperties": False,
            }}},
        })
    return {
        "$schema": "http://json-schema.org/draft-07/schema#",
        "type": "object",
        "required": ["command"],
        "additionalProperties": False,
        "properties": {
            "command": {"enum": COMMANDS},
            "params": {"type": "object"},
            "sweep": {"type": ["array", "null"], "items": COUNT},
            "output": {
                "type": "object",
                "additionalProperties": False,
                "properties": {
                    "path": {"type": ["string", "null"]},
                    "format": {"enum": ["csv", "json"]},
                },
            },
        },
        "allOf": branches,
    }


@dataclass
class RunConfig:
    """A validated request for one CLI command."""

    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    sweep: Optional[List[int]] = None
    output_path: Optional[str] = None
    output_format: str = 'csv'

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'params': self.params,
            'sweep': self.sweep,
            'output': {'path': self.output_path, 'format': self.output_format},
        }

    def basis(self, **defaults: float) -> MuntzBasisParams:
        """
        Basis parameters from the params map, falling back to ``defaults``.

        Raises:
            ParameterError: If the bundle violates a precondition
        """
        values = {**defaults, **{k: self.params[k] for k in BASIS_KEYS if k in self.params}}
        return MuntzBasisParams.create(values.get('alpha', 0.0), values.get('beta', 0.0),
                                       values.get('sigma', 1.0), values.get('eta', 0.0),
                                       values.get('mu', 0.0), values.get('b', 1.0))


def check_preset_basis(params: Dict[str, Any]) -> None:
    """
    Check the basis of a preset after overrides, once per entry of 'sigmas'.

    Raises:
        ParameterError: If the merged bundle violates a precondition
    """
    if 'experiment' not in params:
        return
    merged = {**get_preset(params['experiment'])['params'], **params}
    for sigma in merged.get('sigmas') or [merged.get('sigma', 1.0)]:
        RunConfig('paper-repro', {**merged, 'sigma': sigma}).basis()


class RunConfigValidator(BaseValidator):
    """JSON Schema validation of run configurations."""

    def __init__(self):
        super().__init__("run-config")

    def _initialize_schema(self) -> None:
        self._schema = build_schema()
        jsonschema.Draft7Validator.check_schema(self._schema)

    def validate_data(self, data: Any) -> ValidationResult:
        result = ValidationResult()
        validator = jsonschema.Draft7Validator(self._schema)
        errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
        for error in errors:
            path = " -> ".join(str(p) for p in error.absolute_path) if error.absolute_path else "root"
            result.add_error(f"At '{path}': {error.message}")
        if not errors and data.get('sweep'):
            size_key = 'N' if data['command'] == 'paper-repro' else 'n'
            if size_key in (data.get('params') or {}):
                result.add_warning(f"'{size_key}' is ignored because a sweep is given")
        return result

    def parse(self, data: Dict[str, Any]) -> RunConfig:
        """
        Validate and convert a document into a RunConfig.

        Raises:
            ConfigurationError: If the document does not match the schema
        """
        result = self.validate_data(data)
        result.raise_for_errors("invalid run configuration")
        for warning in result.warnings:
            logger.warning(warning)
        data = copy.deepcopy(data)
        output = data.get('output') or {}
        config = RunConfig(
            command=data['command'],
            params=data.get('params') or {},
            sweep=data.get('sweep'),
            output_path=output.get('path'),
            output_format=output.get('format', 'csv'),
        )
        if config.command == 'paper-repro':
            check_preset_basis(config.params)
        elif any(k in config.params for k in BASIS_KEYS):
            config.basis()
        logger.debug("run configuration accepted: %s", config.command)
        return config


def merge_overrides(document: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Overlay command-line values onto a file document; None values are skipped."""
    merged = copy.deepcopy(document)
    for key in ('command', 'sweep'):
        if overrides.get(key) is not None:
            merged[key] = overrides[key]
    params = merged.setdefault('params', {})
    params.update({k: v for k, v in (overrides.get('params') or {}).items() if v is not None})
    output = merged.setdefault('output', {})
    output.update({k: v for k, v in (overrides.get('output') or {}).items() if v is not None})
    if not output:
        merged.pop('output')
    return merged
