"""
src.shared.infrastructure.event_bus - synchronous event delivery.
"""

from .in_memory_event_bus import EventHandler, InMemoryEventBus

__all__ = [
    "EventHandler",
    "InMemoryEventBus",
]
