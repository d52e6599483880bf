"""
src.interventions.domain.services - Interventions Domain Services module.
"""

from .susceptibility_modifier_service import SusceptibilityModifierService
from .target_selection_service import TargetSelectionService, target_count

__all__ = [
    "SusceptibilityModifierService",
    "TargetSelectionService",
    "target_count",
]
