"""
src.experiments.domain.services - Experiments Domain Services module.
"""

from .experiment_grid_service import ExperimentGridService
from .scenario_factory import BASELINE_SCENARIO, ScenarioFactory
from .synthetic_network_service import SyntheticNetworkService

__all__ = [
    "BASELINE_SCENARIO",
    "ExperimentGridService",
    "ScenarioFactory",
    "SyntheticNetworkService",
]
