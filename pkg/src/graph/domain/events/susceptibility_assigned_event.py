"""
Graph Domain Event - Susceptibility Assigned Event.
"""

from dataclasses import dataclass

from src.shared.domain.events import DomainEvent


@dataclass(frozen=True)
class SusceptibilityAssignedEvent(DomainEvent):
    """
    Domain Event: Node susceptibilities were attached (from a file or by bootstrap).

    `unlisted` and `unknown_ids` are always zero for bootstrap assignment.
    """

    method: str
    assigned: int
    unlisted: int
    unknown_ids: int
    mean_susceptibility: float
