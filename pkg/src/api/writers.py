"""
Result tables and their CSV/JSON serialization.
"""

from __future__ import annotations

import csv
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, IO, Iterable, List, Optional, Sequence

import numpy as np

from exceptions import ConfigurationError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FORMATS = ('csv', 'json')


@dataclass
class ResultTable:
    """Named columns, rows of values and free-form metadata for one command run."""

    command: str
    columns: List[str]
    rows: List[tuple] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add_row(self, *values: Any) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"row has {len(values)} values, table has {len(self.columns)} columns")
        self.rows.append(tuple(values))

    def extend(self, rows: Iterable[Sequence[Any]]) -> None:
        for row in rows:
            self.add_row(*row)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'schema_version': SCHEMA_VERSION,
            'command': self.command,
            'columns': self.columns,
            'rows': [[_json_value(v) for v in row] for row in self.rows],
            'metadata': _json_value(self.metadata),
        }


def format_value(value: Any, precision: int = 17) -> str:
    """Text form for CSV cells; floats keep ``precision`` significant digits."""
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{precision}g}"
    if value is None:
        return ''
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_json_value(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    return value


def write_csv(table: ResultTable, stream: IO[str], precision: int = 17) -> None:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v, precision) for v in row])


def write_json(table: ResultTable, stream: IO[str]) -> None:
    json.dump(table.to_dict(), stream, indent=2, allow_nan=False)
    stream.write('\n')


def write_table(table: ResultTable, path: Optional[str] = None, fmt: str = 'csv', precision: int = 17) -> None:
    """
    Write to ``path`` or stdout.

    Raises:
        ConfigurationError: For an unknown format or an unwritable path
    """
    if fmt not in FORMATS:
        raise ConfigurationError(f"Unknown output format: {fmt}. Available: {list(FORMATS)}")

    def emit(stream: IO[str]) -> None:
        if fmt == 'csv':
            write_csv(table, stream, precision)
        else:
            write_json(table, stream)

    if path is None or path == '-':
        emit(sys.stdout)
        return
    try:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8', newline='') as f:
            emit(f)
    except OSError as exc:
        raise ConfigurationError(f"cannot write {path}: {exc}") from exc
    logger.info("wrote %d rows to %s", len(table.rows), path)
