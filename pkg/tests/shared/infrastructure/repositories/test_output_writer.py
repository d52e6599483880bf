"""
Unit Tests for OutputWriter and file_digest.

Test categories:
- CSV output tests
- JSON output tests
- Digest tests
"""

# pylint: disable=redefined-outer-name

import hashlib
import json
from enum import Enum

import numpy as np
import pandas as pd
import pytest

from src.shared.infrastructure.repositories import OutputWriter, file_digest


class Colour(Enum):
    """Enum serialized by value."""

    RED = "red"


@pytest.fixture
def writer(tmp_path):
    """Writer below a not yet existing directory."""
    return OutputWriter(tmp_path / "out" / "nested")


class TestOutputWriterCsv:
    """Test CSV output."""

    def test_creates_directory(self, writer):
        """Test that the output directory is created."""
        assert writer.output_dir.is_dir()

    def test_write_csv_without_index_and_with_empty_missing(self, writer):
        """Test the CSV layout."""
        path = writer.write_csv("curve.csv", pd.DataFrame({"t": [0.0, 1.5], "mean": [0.1, np.nan]}))

        assert path.read_text(encoding="utf-8").splitlines() == ["t,mean", "0,0.1", "1.5,"]

    def test_written_lists_files_in_order(self, writer):
        """Test that the writer tracks its outputs."""
        first = writer.write_csv("a.csv", pd.DataFrame({"x": [1]}))
        second = writer.write_json("b.json", {"x": 1})

        assert writer.written == [first, second]

    def test_written_returns_copy(self, writer):
        """Test that callers cannot mutate the internal list."""
        writer.written.append("bogus")

        assert writer.written == []


class TestOutputWriterJson:
    """Test JSON output."""

    def test_numpy_enum_and_nan_values_are_serialized(self, writer):
        """Test conversion of non-JSON types."""
        path = writer.write_json(
            "summary.json",
            {"runs": np.int64(3), "curve": np.array([0.5, 1.0]), "colour": Colour.RED, "ctx_time": float("nan")},
        )

        assert json.loads(path.read_text(encoding="utf-8")) == {
            "colour": "red",
            "ctx_time": None,
            "curve": [0.5, 1.0],
            "runs": 3,
        }

    def test_keys_are_sorted(self, writer):
        """Test deterministic key order."""
        path = writer.write_json("s.json", {"b": 1, "a": 2})

        text = path.read_text(encoding="utf-8")
        assert text.index('"a"') < text.index('"b"')


class TestFileDigest:
    """Test file hashing."""

    def test_digest_matches_hashlib(self, tmp_path):
        """Test prefix and value."""
        path = tmp_path / "edges.txt"
        path.write_bytes(b"1 2\n2 3\n")

        assert file_digest(path) == "sha256:" + hashlib.sha256(b"1 2\n2 3\n").hexdigest()
