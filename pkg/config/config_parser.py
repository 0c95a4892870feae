"""Parser for run configuration files."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

import yaml
from jsonschema import ValidationError, validate

from core.exceptions import ConfigError, ConfigValidationError
from .config_schema import PRESENTATION_SCHEMA, RUN_CONFIG_SCHEMA
from .run_config import RunConfig


logger = logging.getLogger(__name__)


class ConfigParser:
    """Loads YAML or JSON run configurations and validates them."""

    def parse_file(self, file_path: Union[str, Path]) -> Dict[str, Any]:
        """Parse and validate a configuration file.

        Raises:
            ConfigError: If the file is missing or unreadable
            ConfigValidationError: If the content violates the schema
        """
        path = Path(file_path)
        if not path.exists():
            raise ConfigError(f"Config file not found: {path}")
        try:
            content = path.read_text(encoding="utf-8")
        except OSError as e:
            logger.error(f"Failed to read config file: {e}")
            raise ConfigError(f"Failed to read config file: {e}") from e
        return self.parse_string(content)

    def parse_string(self, content: str) -> Dict[str, Any]:
        try:
            data = yaml.safe_load(content)
        except yaml.YAMLError as e:
            try:
                data = json.loads(content)
            except json.JSONDecodeError as json_e:
                raise ConfigError(f"Failed to parse config: {e} or {json_e}") from json_e
        if data is None:
            data = {}
        self.validate_config(data)
        return data

    def validate_config(self, data: Dict[str, Any]) -> None:
        try:
            validate(instance=data, schema=RUN_CONFIG_SCHEMA)
        except ValidationError as e:
            logger.error(f"Config validation failed: {e.message}")
            raise ConfigValidationError(f"Config validation failed: {e.message}") from e

    def validate_presentation(self, data: Dict[str, Any]) -> None:
        try:
            validate(instance=data, schema=PRESENTATION_SCHEMA)
        except ValidationError as e:
            logger.error(f"Presentation output is malformed: {e.message}")
            raise ConfigValidationError(f"Presentation output is malformed: {e.message}") from e

    def load(self, file_path: Union[str, Path, None] = None, **overrides: Any) -> RunConfig:
        """RunConfig from an optional file, with command-line overrides on top."""
        data = self.parse_file(file_path) if file_path else {}
        config = RunConfig(**data).with_overrides(**overrides)
        self.validate_config(config.to_dict())
        return config
