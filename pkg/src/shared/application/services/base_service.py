"""
Shared Application Base Service
"""

from src.shared.domain.events import DomainEvent, IDomainEventPublisher
from src.shared.domain.aggregates import BaseAggregate


class BaseService:
    """
    Base Service class for Application Services.

    Holds the repository the use cases read from and the optional event bus
    their aggregates publish to.
    """

    def __init__(self, repository=None, event_bus: IDomainEventPublisher | None = None):
        self._repository = repository
        self._event_bus = event_bus

    @property
    def repository(self):
        """Get the repository instance."""
        return self._repository

    @property
    def event_bus(self) -> IDomainEventPublisher | None:
        """Get the event bus instance."""
        return self._event_bus

    def publish(self, event: DomainEvent):
        """
        Publish a single event raised outside an aggregate.

        Args:
            event (DomainEvent): Event to publish; dropped when no bus is wired.
        """
        if self._event_bus is not None:
            self._event_bus.publish(event)

    def publish_events(self, aggregate: BaseAggregate):
        """
        Publish the aggregate's pending events; without a bus they are dropped.

        Args:
            aggregate (BaseAggregate): Aggregate with pending events
        """
        events = aggregate.pull_domain_events()
        if self._event_bus is not None:
            self._event_bus.publish_all(events)
