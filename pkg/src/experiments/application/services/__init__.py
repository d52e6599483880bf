"""
src.experiments.application.services - Experiments Application Services module.
"""

from .experiment_service import ExperimentService

__all__ = [
    "ExperimentService",
]
