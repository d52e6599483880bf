"""
Base CSV Repository Module.
"""

from abc import ABC
from pathlib import Path

import pandas as pd

from src.shared.domain.exceptions import SurveyDataError


class CSVRepository(ABC):
    """
    Base class for CSV-based repositories.
    Provides common functionality for loading CSV files.
    """

    def __init__(self, file_path: str | Path):
        """
        Initialize `CSVRepository` with CSV file path.
        """
        self._file_path = Path(file_path)

    @property
    def file_path(self) -> Path:
        """Path of the backing CSV file."""
        return self._file_path

    def _load_csv(self, sep: str = ",", **kwargs) -> pd.DataFrame:
        """
        Load a CSV file and return its contents as a pandas DataFrame.

        Args:
            sep (str): The separator used in the CSV file.
            **kwargs: Additional keyword arguments passed to `pandas.read_csv`

        Returns:
            pd.DataFrame: The contents of the CSV file.
        """
        if not self._file_path.is_file():
            raise FileNotFoundError(f"Input file not found: {self._file_path}")

        return pd.read_csv(self._file_path, sep=sep, **kwargs)

    def _require_columns(self, df: pd.DataFrame, columns: list[str], error: type[ValueError] = SurveyDataError):
        """
        Check that the loaded table carries the documented header.

        Args:
            df (pd.DataFrame): Loaded table.
            columns (list[str]): Required column names.
            error (type): Exception raised for a missing column.

        Raises:
            SurveyDataError: If a column is missing (or the given error type).
        """
        missing = [column for column in columns if column not in df.columns]
        if missing:
            raise error(f"{self._file_path}: missing column(s) {', '.join(missing)}.")

    def load_csv(self, sep: str = ",", **kwargs) -> pd.DataFrame:
        """
        Public method to load CSV file for testing and inspection purposes.

        Args:
            sep (str): The separator used in the CSV file.
            **kwargs: Additional keyword arguments passed to `pandas.read_csv`

        Returns:
            pd.DataFrame: The contents of the CSV file.
        """
        return self._load_csv(sep=sep, **kwargs)
