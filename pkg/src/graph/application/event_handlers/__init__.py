"""
src.graph.application.event_handlers - Graph Application Event Handlers module.
"""

from .network_event_handler import NetworkEventHandler

__all__ = [
    "NetworkEventHandler",
]
