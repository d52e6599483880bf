"""
Shared Infrastructure - Output Writer.

Writes result tables and JSON documents into one output directory and keeps
track of every file written (the run manifest lists them).
"""

import hashlib
import json
import math
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from src.shared.infrastructure.logging_config import get_logger

logger = get_logger(__name__)


def file_digest(path: str | Path, algorithm: str = "sha256") -> str:
    """
    Compute the hex digest of a file.

    Args:
        path: File to hash.
        algorithm: hashlib algorithm name.

    Returns:
        str: "<algorithm>:<hexdigest>".
    """
    digest = hashlib.new(algorithm)
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return f"{algorithm}:{digest.hexdigest()}"


def _to_jsonable(value: Any) -> Any:
    """Convert numpy scalars/arrays, enums and paths for json.dump."""
    if isinstance(value, dict):
        return {str(key): _to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return [_to_jsonable(item) for item in value.tolist()]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


class OutputWriter:
    """
    Writes CSV and JSON outputs below a directory.
    """

    def __init__(self, output_dir: str | Path):
        """
        Initialize the writer, creating the directory when needed.

        Args:
            output_dir: Target directory.
        """
        self._output_dir = Path(output_dir)
        self._output_dir.mkdir(parents=True, exist_ok=True)
        self._written: list[Path] = []

    @property
    def output_dir(self) -> Path:
        """Directory receiving the outputs."""
        return self._output_dir

    @property
    def written(self) -> list[Path]:
        """Files written so far, in order."""
        return list(self._written)

    def write_csv(self, name: str, df: pd.DataFrame) -> Path:
        """
        Write a table as CSV (no index, empty field for missing values).

        Args:
            name: File name relative to the output directory.
            df: Table to write.

        Returns:
            Path: Written file.
        """
        path = self._output_dir / name
        df.to_csv(path, index=False, na_rep="", float_format="%.10g")
        self._written.append(path)
        logger.info("Wrote %s (%d rows)", path, len(df))
        return path

    def write_json(self, name: str, payload: dict) -> Path:
        """
        Write a JSON document with sorted keys.

        Args:
            name: File name relative to the output directory.
            payload: JSON-serializable mapping (numpy values allowed).

        Returns:
            Path: Written file.
        """
        path = self._output_dir / name
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(_to_jsonable(payload), handle, indent=2, sort_keys=True)
            handle.write("\n")
        self._written.append(path)
        logger.info("Wrote %s", path)
        return path
