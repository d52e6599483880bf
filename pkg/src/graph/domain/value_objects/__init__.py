"""
src.graph.domain.value_objects - Graph Domain Value Objects module.
"""

from .node_id_map import NodeIdMap
from .load_report import EdgeListLoadReport, SusceptibilityLoadReport

__all__ = [
    "EdgeListLoadReport",
    "NodeIdMap",
    "SusceptibilityLoadReport",
]
