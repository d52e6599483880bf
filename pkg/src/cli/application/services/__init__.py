"""
src.cli.application.services - CLI Application Services module.
"""

from .command_service import COMMANDS, CommandService

__all__ = [
    "COMMANDS",
    "CommandService",
]
