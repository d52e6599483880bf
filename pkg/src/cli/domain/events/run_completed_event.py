"""
CLI Domain Event - Run Completed Event.
"""

from dataclasses import dataclass

from src.shared.domain.events import DomainEvent


@dataclass(frozen=True)
class RunCompletedEvent(DomainEvent):
    """
    Domain Event: A command wrote all of its outputs and its manifest.

    Emitted by: RunAggregate
    Consumed by: RunEventHandler
    """

    command: str
    output_dir: str
    output_count: int
    duration_seconds: float
