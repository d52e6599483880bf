"""
Centralized Logging Configuration Module.

Every command logs progress to standard error; result files are the only
output, so standard output stays empty.
"""

import sys
import logging
from typing import TextIO

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(level: int = logging.INFO, stream: TextIO | None = None):
    """
    Configure the root logger for one command-line invocation.

    Replaces any handler installed by an earlier call and routes Python
    warnings (numpy RuntimeWarnings included) through the same handler.

    Args:
        level: Logging level (INFO by default, DEBUG for --verbose).
        stream: Destination (standard error when omitted).
    """
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr if stream is None else stream)],
        force=True,
    )
    logging.captureWarnings(True)


def get_logger(name: str) -> logging.Logger:
    """Logger of a module (pass __name__)."""
    return logging.getLogger(name)
