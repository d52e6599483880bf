"""
src.experiments.domain.value_objects - Experiments Domain Value Objects module.
"""

from .scenario import Scenario, ScenarioOutcome, ScenarioSet
from .sweep_grid import StrategyDifferential, SweepGrid

__all__ = [
    "Scenario",
    "ScenarioOutcome",
    "ScenarioSet",
    "StrategyDifferential",
    "SweepGrid",
]
