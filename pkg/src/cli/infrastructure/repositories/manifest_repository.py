"""
CLI Infrastructure - Run manifest file.
"""

from pathlib import Path

from src.shared.infrastructure.repositories import OutputWriter, file_digest
from src.cli.domain.value_objects import RunManifest

MANIFEST_NAME = "manifest.json"


class ManifestRepository:
    """
    Repository writing `manifest.json` next to a run's outputs.
    """

    def __init__(self, writer: OutputWriter):
        self._writer = writer

    @staticmethod
    def digests(paths) -> dict[str, str]:
        """sha256 digest per existing file."""
        return {str(path): file_digest(path) for path in paths if path is not None and Path(path).is_file()}

    def output_digests(self) -> dict[str, str]:
        """Digests of everything the writer produced, keyed by file name."""
        return {path.name: file_digest(path) for path in self._writer.written if path.name != MANIFEST_NAME}

    def save(self, manifest: RunManifest) -> Path:
        return self._writer.write_json(MANIFEST_NAME, manifest.to_dict())
