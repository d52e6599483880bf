"""
src.diffusion.domain.value_objects - Diffusion Domain Value Objects module.
"""

from .diffusion_params import DiffusionParams
from .simulation_result import MonteCarloSummary, SimulationResult

__all__ = [
    "DiffusionParams",
    "MonteCarloSummary",
    "SimulationResult",
]
