"""
src.qmf.domain.services - QMF Domain Services module.
"""

from .critical_condition_service import CriticalConditionService, critical_epsilon_from_radius
from .spectral_radius_service import SpectralRadiusService

__all__ = [
    "CriticalConditionService",
    "SpectralRadiusService",
    "critical_epsilon_from_radius",
]
