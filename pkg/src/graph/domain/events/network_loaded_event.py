"""
Graph Domain Event - Network Loaded Event.
"""

from dataclasses import dataclass

from src.shared.domain.events import DomainEvent


@dataclass(frozen=True)
class NetworkLoadedEvent(DomainEvent):
    """
    Domain Event: An edge list was read into a graph.

    Emitted by: NetworkAggregate
    Consumed by: NetworkEventHandler (logging of the load report)
    """

    source: str
    node_count: int
    edge_count: int
    self_loops_dropped: int
    duplicates_collapsed: int
