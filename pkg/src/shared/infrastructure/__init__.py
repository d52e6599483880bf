"""
Shared infrastructure: logging setup for every context.

Event bus and table repositories live in their own subpackages.
"""

from .logging_config import get_logger, setup_logging

__all__ = ["get_logger", "setup_logging"]
