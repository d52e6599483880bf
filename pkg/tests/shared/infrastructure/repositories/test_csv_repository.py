"""
Unit Tests for CSVRepository.

Test categories:
- Initialization tests
- Load CSV tests
- Column check tests
"""

# pylint: disable=redefined-outer-name

from pathlib import Path
from unittest.mock import patch

import pandas as pd
import pytest

from src.shared.domain.exceptions import CascadeDataError, SurveyDataError
from src.shared.infrastructure.repositories import CSVRepository


class ConcreteCSVRepository(CSVRepository):
    """Concrete implementation of CSVRepository for testing purposes."""


@pytest.fixture
def survey_csv(tmp_path):
    """Small semicolon-separated file."""
    path = tmp_path / "survey.csv"
    path.write_text("item_id;response\nq1;4\nq2;2\n", encoding="utf-8")
    return path


class TestCSVRepositoryInitialization:
    """Test initialization of CSVRepository."""

    def test_file_path_is_normalized_to_path(self):
        """Test that string paths become Path objects."""
        repo = ConcreteCSVRepository("data/cascades.csv")

        assert repo.file_path == Path("data/cascades.csv")


class TestLoadCSV:
    """Test CSV loading."""

    def test_load_csv_reads_file_with_separator(self, survey_csv):
        """Test that the separator is honoured."""
        df = ConcreteCSVRepository(survey_csv).load_csv(sep=";")

        assert list(df.columns) == ["item_id", "response"]
        assert df["response"].tolist() == [4, 2]

    def test_load_csv_passes_extra_kwargs(self, survey_csv):
        """Test that keyword arguments reach pandas.read_csv."""
        with patch("src.shared.infrastructure.repositories.csv_repository.pd.read_csv") as mock_read:
            mock_read.return_value = pd.DataFrame()
            ConcreteCSVRepository(survey_csv).load_csv(sep=";", dtype={"item_id": str})

        mock_read.assert_called_once_with(survey_csv, sep=";", dtype={"item_id": str})

    def test_missing_file_raises(self, tmp_path):
        """Test that a missing input file is reported before pandas is called."""
        with pytest.raises(FileNotFoundError, match="missing.csv"):
            ConcreteCSVRepository(tmp_path / "missing.csv").load_csv()


class TestRequireColumns:
    """Test header validation."""

    def test_missing_column_raises_survey_error_by_default(self, survey_csv):
        """Test the default error type and message."""
        repo = ConcreteCSVRepository(survey_csv)
        df = repo.load_csv(sep=";")

        with pytest.raises(SurveyDataError, match="condition"):
            repo._require_columns(df, ["item_id", "condition"])  # pylint: disable=protected-access

    def test_custom_error_type(self, survey_csv):
        """Test that cascade loaders can raise their own error."""
        repo = ConcreteCSVRepository(survey_csv)
        df = repo.load_csv(sep=";")

        with pytest.raises(CascadeDataError, match="timestamp_hours"):
            repo._require_columns(df, ["timestamp_hours"], error=CascadeDataError)  # pylint: disable=protected-access

    def test_complete_header_passes(self, survey_csv):
        """Test that no error is raised when all columns exist."""
        repo = ConcreteCSVRepository(survey_csv)
        repo._require_columns(repo.load_csv(sep=";"), ["item_id", "response"])  # pylint: disable=protected-access
