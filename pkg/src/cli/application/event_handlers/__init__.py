"""
src.cli.application.event_handlers - CLI Application Event Handlers module.
"""

from .run_event_handler import RunEventHandler

__all__ = [
    "RunEventHandler",
]
