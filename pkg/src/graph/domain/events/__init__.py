"""
src.graph.domain.events - Graph Domain Events module.
"""

from .network_loaded_event import NetworkLoadedEvent
from .component_extracted_event import ComponentExtractedEvent
from .susceptibility_assigned_event import SusceptibilityAssignedEvent

__all__ = [
    "ComponentExtractedEvent",
    "NetworkLoadedEvent",
    "SusceptibilityAssignedEvent",
]
