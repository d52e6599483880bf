"""
src.diffusion.infrastructure.repositories - Diffusion Infrastructure Repositories module.
"""

from .simulation_output_repository import SimulationOutputRepository

__all__ = [
    "SimulationOutputRepository",
]
