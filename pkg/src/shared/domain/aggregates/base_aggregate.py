"""
Shared Domain Aggregate - Base Aggregate Module.
"""

from src.shared.domain.events import DomainEvent


class BaseAggregate:
    """
    Base Aggregate Root: Collects the events raised by its business methods.

    Events stay pending until an application service pulls them for publication.
    """

    def __init__(self):
        self._domain_events: list[DomainEvent] = []

    def _add_domain_event(self, event: DomainEvent) -> None:
        """
        Queue an event raised by a business method.

        Args:
            event: Event to publish later.
        """
        self._domain_events.append(event)

    @property
    def pending_events(self) -> tuple[DomainEvent, ...]:
        """Events raised since the last pull, oldest first."""
        return tuple(self._domain_events)

    def has_domain_events(self) -> bool:
        return bool(self._domain_events)

    def pull_domain_events(self) -> list[DomainEvent]:
        """
        Hand over the pending events and forget them.

        Returns:
            list[DomainEvent]: Pending events, oldest first.
        """
        events, self._domain_events = self._domain_events, []
        return events
