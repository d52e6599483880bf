"""
CLI Domain Event - Run Failed Event.
"""

from dataclasses import dataclass

from src.shared.domain.events import DomainEvent


@dataclass(frozen=True)
class RunFailedEvent(DomainEvent):
    """
    Domain Event: A command stopped with an error.
    """

    command: str
    error_type: str
    message: str
    exit_code: int
