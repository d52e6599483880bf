"""
src.graph.domain.aggregates - Graph Domain Aggregates module.
"""

from .network_aggregate import NetworkAggregate

__all__ = [
    "NetworkAggregate",
]
