"""
Experiments Infrastructure - Sweep, targeting and scenario output files.
"""

from pathlib import Path

import pandas as pd

from src.shared.infrastructure.repositories import OutputWriter
from src.experiments.domain.value_objects import ScenarioSet, StrategyDifferential, SweepGrid


class ExperimentOutputRepository:
    """
    Repository writing experiment tables in long format.

    - sweep_<label>.csv: axis1, axis2, prevalence, relative_prevalence, std
    - targeting.csv: one block of rows per strategy
    - scenarios.csv and scenario_runs.csv
    """

    def __init__(self, writer: OutputWriter):
        self._writer = writer

    def save_sweep(self, grid: SweepGrid) -> Path:
        name = f"sweep_{grid.label}.csv" if grid.label else "sweep.csv"
        return self._writer.write_csv(name, grid.to_frame())

    def save_differentials(self, differentials: list[StrategyDifferential]) -> Path:
        frame = pd.concat([differential.to_frame() for differential in differentials], ignore_index=True)
        return self._writer.write_csv("targeting.csv", frame)

    def save_scenarios(self, scenarios: ScenarioSet) -> list[Path]:
        return [
            self._writer.write_csv("scenarios.csv", scenarios.summary_frame()),
            self._writer.write_csv("scenario_runs.csv", scenarios.runs_frame()),
        ]
