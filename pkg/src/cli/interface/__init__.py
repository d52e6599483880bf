"""
src.cli.interface - Command-line interface module.
"""

from .command_line_app import CommandLineApp

__all__ = ["CommandLineApp"]
