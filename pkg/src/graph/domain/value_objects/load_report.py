"""
Graph Domain Value Objects - Load Reports.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class EdgeListLoadReport:
    """
    Counts collected while reading an edge list.
    """

    lines_read: int
    self_loops_dropped: int
    duplicates_collapsed: int
    node_count: int
    edge_count: int

    def to_dict(self) -> dict:
        """Convert to dictionary representation."""
        return {
            "lines_read": self.lines_read,
            "self_loops_dropped": self.self_loops_dropped,
            "duplicates_collapsed": self.duplicates_collapsed,
            "node_count": self.node_count,
            "edge_count": self.edge_count,
        }


@dataclass(frozen=True)
class SusceptibilityLoadReport:
    """
    Counts collected while attaching susceptibilities to a graph.

    Unlisted nodes keep susceptibility 0 and can never be activated by a neighbor.
    """

    assigned: int
    unlisted: int
    unknown_ids: int
    source: str

    @property
    def complete(self) -> bool:
        """True when every node received a value."""
        return self.unlisted == 0

    def to_dict(self) -> dict:
        """Convert to dictionary representation."""
        return {
            "assigned": self.assigned,
            "unlisted": self.unlisted,
            "unknown_ids": self.unknown_ids,
            "source": self.source,
        }
