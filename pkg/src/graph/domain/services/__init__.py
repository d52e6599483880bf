"""
src.graph.domain.services - Graph Domain Services module.
"""

from .graph_structure_service import GraphStructureService, UNREACHABLE
from .susceptibility_assignment_service import SusceptibilityAssignmentService

__all__ = [
    "GraphStructureService",
    "SusceptibilityAssignmentService",
    "UNREACHABLE",
]
