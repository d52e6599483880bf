"""
Shared Domain - Domain Event Publisher Interface.
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable

from .domain_event import DomainEvent


class IDomainEventPublisher(ABC):
    """
    Port through which application services hand aggregate events to their handlers.

    Handlers are registered per concrete event class; a handler registered for a
    base class does not receive subclasses.
    """

    @abstractmethod
    def subscribe(self, event_type: type[DomainEvent], handler: Callable[[DomainEvent], None]) -> None:
        """
        Register a handler for one event class.

        Args:
            event_type: Concrete event class, e.g. NetworkLoadedEvent.
            handler: Callable receiving the event.
        """
        raise NotImplementedError

    @abstractmethod
    def publish(self, event: DomainEvent) -> None:
        """
        Deliver one event to the handlers of its class.

        Args:
            event: Event raised by an aggregate or service.
        """
        raise NotImplementedError

    def publish_all(self, events: Iterable[DomainEvent]) -> None:
        """Deliver events in order."""
        for event in events:
            self.publish(event)
