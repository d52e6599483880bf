"""
src.cli.domain.value_objects - CLI Domain Value Objects module.
"""

from .run_config import DEFAULT_RUN_CONFIG, FREE_FORM_KEYS, RunConfig, parse_grid
from .run_manifest import RunManifest

__all__ = [
    "DEFAULT_RUN_CONFIG",
    "FREE_FORM_KEYS",
    "RunConfig",
    "RunManifest",
    "parse_grid",
]
