"""
src.graph.application.services - Graph Application Services module.
"""

from .network_service import NetworkService

__all__ = [
    "NetworkService",
]
