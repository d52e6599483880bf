"""
src.experiments.infrastructure.repositories - Experiments Infrastructure Repositories module.
"""

from .experiment_output_repository import ExperimentOutputRepository
from .preset_repository import PRESET_NOTE, ExperimentPresetRepository

__all__ = [
    "PRESET_NOTE",
    "ExperimentOutputRepository",
    "ExperimentPresetRepository",
]
