"""
src.cli.domain.services - CLI Domain Services module.
"""

from .config_merge_service import ConfigMergeService
from .exit_code_service import ExitCode, ExitCodeService

__all__ = [
    "ConfigMergeService",
    "ExitCode",
    "ExitCodeService",
]
