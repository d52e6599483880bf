"""
Shared Infrastructure - In-Memory Event Bus Implementation.
"""

from collections import defaultdict
from collections.abc import Callable

from src.shared.infrastructure.logging_config import get_logger
from src.shared.domain.events import DomainEvent, IDomainEventPublisher

logger = get_logger(__name__)

EventHandler = Callable[[DomainEvent], None]


class InMemoryEventBus(IDomainEventPublisher):
    """
    Synchronous, single-process event bus.

    Handlers run in subscription order. A failing handler is logged and does not
    stop the remaining handlers or the command that raised the event.
    """

    def __init__(self):
        self._handlers: defaultdict[type[DomainEvent], list[EventHandler]] = defaultdict(list)

    def subscribe(self, event_type: type[DomainEvent], handler: EventHandler) -> None:
        handlers = self._handlers[event_type]
        if handler in handlers:
            return
        handlers.append(handler)
        logger.debug("Subscribed %s to %s", getattr(handler, "__qualname__", repr(handler)), event_type.__name__)

    def subscriber_count(self, event_type: type[DomainEvent]) -> int:
        """Number of handlers registered for an event class."""
        return len(self._handlers.get(event_type, ()))

    def publish(self, event: DomainEvent) -> None:
        handlers = self._handlers.get(type(event), ())
        if not handlers:
            logger.debug("No handler for %s", event.event_type())
            return

        logger.debug("Publishing %s to %d handler(s): %s", event.event_type(), len(handlers), event.payload())
        for handler in list(handlers):
            try:
                handler(event)
            except Exception as exc:  # pylint: disable=broad-exception-caught
                logger.error("Handler for %s failed: %s", event.event_type(), exc, exc_info=True)
