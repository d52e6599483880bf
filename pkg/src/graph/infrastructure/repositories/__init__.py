"""
src.graph.infrastructure.repositories - Network file repositories module.
"""

from .text_network_repository import EdgeListRepository, IdMapRepository, SusceptibilityRepository

__all__ = [
    "EdgeListRepository",
    "IdMapRepository",
    "SusceptibilityRepository",
]
