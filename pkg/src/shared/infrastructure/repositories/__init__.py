"""
src.shared.infrastructure.repositories - Shared Infrastructure Repositories module.
"""

from .csv_repository import CSVRepository
from .output_writer import OutputWriter, file_digest

__all__ = [
    "CSVRepository",
    "OutputWriter",
    "file_digest",
]
