"""
src.cli.domain.aggregates - CLI Domain Aggregates module.
"""

from .run_aggregate import RunAggregate

__all__ = [
    "RunAggregate",
]
