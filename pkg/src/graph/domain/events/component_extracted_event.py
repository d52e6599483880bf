"""
Graph Domain Event - Component Extracted Event.
"""

from dataclasses import dataclass

from src.shared.domain.events import DomainEvent


@dataclass(frozen=True)
class ComponentExtractedEvent(DomainEvent):
    """
    Domain Event: The graph was restricted to its largest weakly connected component.
    """

    nodes_before: int
    nodes_after: int
    edges_after: int
