"""
Shared Domain Event - Domain Event Module.
"""

import uuid
from dataclasses import dataclass, field, fields
from datetime import datetime

_METADATA = ("event_id", "occurred_at")


@dataclass(frozen=True, kw_only=True)
class DomainEvent:
    """
    Base class for the events raised while preparing networks and running commands.

    Subclasses are frozen dataclasses; `event_id` and `occurred_at` are filled in
    automatically.
    """

    event_id: str = field(default_factory=lambda: str(uuid.uuid4()))
    occurred_at: datetime = field(default_factory=datetime.now)

    def event_type(self) -> str:
        """Class name of the event (used in log lines)."""
        return type(self).__name__

    def payload(self) -> dict:
        """Event fields without the id and timestamp metadata."""
        return {item.name: getattr(self, item.name) for item in fields(self) if item.name not in _METADATA}
