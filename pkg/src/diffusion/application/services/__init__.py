"""
src.diffusion.application.services - Diffusion Application Services module.
"""

from .diffusion_service import DiffusionService

__all__ = [
    "DiffusionService",
]
