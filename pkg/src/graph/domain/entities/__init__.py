"""
src.graph.domain.entities - Graph Domain Entities module.
"""

from .directed_graph import DirectedGraph, clean_edges

__all__ = [
    "DirectedGraph",
    "clean_edges",
]
