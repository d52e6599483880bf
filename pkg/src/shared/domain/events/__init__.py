"""
src.shared.domain.events - base event type and publisher port.
"""

from .domain_event import DomainEvent
from .domain_event_publisher_interface import IDomainEventPublisher

__all__ = [
    "DomainEvent",
    "IDomainEventPublisher",
]
