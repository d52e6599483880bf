"""
src.cli.infrastructure.repositories - CLI Infrastructure Repositories module.
"""

from .json_config_repository import JSONConfigRepository
from .manifest_repository import MANIFEST_NAME, ManifestRepository

__all__ = [
    "MANIFEST_NAME",
    "JSONConfigRepository",
    "ManifestRepository",
]
