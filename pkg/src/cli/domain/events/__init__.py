"""
src.cli.domain.events - CLI Domain Events module.
"""

from .run_completed_event import RunCompletedEvent
from .run_failed_event import RunFailedEvent

__all__ = [
    "RunCompletedEvent",
    "RunFailedEvent",
]
