"""
Base validator interface and common validation types.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, List, Union

import json
import yaml

from exceptions import ConfigurationError


@dataclass
class ValidationResult:
    """Result of a validation operation."""

    is_valid: bool = True
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def add_error(self, message: str) -> None:
        """Add an error message."""
        self.errors.append(message)
        self.is_valid = False

    def add_warning(self, message: str) -> None:
        """Add a warning message."""
        self.warnings.append(message)

    def raise_for_errors(self, context: str) -> None:
        """
        Raise if any error was recorded.

        Raises:
            ConfigurationError: With every error message joined
        """
        if not self.is_valid:
            raise ConfigurationError(f"{context}: " + "; ".join(self.errors))


class BaseValidator(ABC):
    """
    Base class for structured-document validators.

    Subclasses prepare their schema once and validate parsed documents.
    """

    def __init__(self, name: str):
        self.name = name
        self._schema = None
        self._initialize_schema()

    @abstractmethod
    def _initialize_schema(self) -> None:
        """Parse and check the schema."""

    @abstractmethod
    def validate_data(self, data: Any) -> ValidationResult:
        """
        Validate a parsed document.

        Args:
            data: The document (usually a dict)

        Returns:
            ValidationResult with validation outcome
        """

    def load_file(self, file_path: Union[str, Path]) -> Any:
        """
        Read a JSON or YAML document; the suffix picks the parser.

        Raises:
            ConfigurationError: If the file is missing or does not parse
        """
        file_path = Path(file_path)
        if not file_path.exists():
            raise ConfigurationError(f"File does not exist: {file_path}")
        content = file_path.read_text(encoding='utf-8')
        try:
            if file_path.suffix.lower() in ('.yaml', '.yml'):
                return yaml.safe_load(content)
            return json.loads(content)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise ConfigurationError(f"Error parsing {file_path}: {e}") from e
