"""
src.shared.domain.aggregates - event-collecting aggregate root base.
"""

from .base_aggregate import BaseAggregate

__all__ = ["BaseAggregate"]
