"""
CLI Infrastructure - JSON run configuration files.
"""

import json
from pathlib import Path

from src.shared.domain.exceptions import ConfigurationError
from src.shared.infrastructure import get_logger

logger = get_logger(__name__)


class JSONConfigRepository:
    """
    Repository reading one run configuration document (a JSON object).
    """

    def __init__(self, file_path: str | Path):
        self._file_path = Path(file_path)

    @property
    def file_path(self) -> Path:
        return self._file_path

    def load(self) -> dict:
        """
        Read the configuration.

        Returns:
            dict: Raw configuration layer (merged onto defaults by ConfigMergeService).

        Raises:
            FileNotFoundError: If the file does not exist.
            ConfigurationError: If the file is not a JSON object.
        """
        if not self._file_path.is_file():
            raise FileNotFoundError(f"Configuration file not found: {self._file_path}")
        try:
            with open(self._file_path, encoding="utf-8") as handle:
                data = json.load(handle)
        except json.JSONDecodeError as error:
            raise ConfigurationError(
                f"{self._file_path} is not valid JSON (line {error.lineno}, column {error.colno}): {error.msg}"
            ) from error
        if not isinstance(data, dict):
            raise ConfigurationError(f"{self._file_path} must hold a JSON object at the top level")
        logger.debug("Read configuration %s", self._file_path)
        return data
