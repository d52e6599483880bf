"""
Experiments Domain Value Objects - Scenarios.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.interventions.domain.value_objects import InterventionPlan
from src.diffusion.domain.value_objects import DiffusionParams


@dataclass(frozen=True)
class Scenario:
    """
    Value Object: A named intervention plan under given diffusion parameters.
    """

    name: str
    plan: InterventionPlan
    params: DiffusionParams

    @staticmethod
    def from_dict(data: dict, default_params: DiffusionParams) -> "Scenario":
        """Build from {"name", "plan", optional "params"}."""
        params = DiffusionParams.from_dict(data["params"]) if data.get("params") else default_params
        return Scenario(name=str(data["name"]), plan=InterventionPlan.from_dict(data.get("plan")), params=params)


@dataclass(frozen=True, eq=False)
class ScenarioOutcome:
    """
    Value Object: Per-run relative prevalence of one scenario.

    Run i is normalized by the no-intervention run i sharing its random numbers.
    """

    scenario: Scenario
    run_prevalences: np.ndarray
    relative_prevalences: np.ndarray
    ctx_time: float | None = None

    @property
    def mean_prevalence(self) -> float:
        return float(np.mean(self.run_prevalences))

    @property
    def mean_relative_prevalence(self) -> float:
        return float(np.mean(self.relative_prevalences))

    @property
    def relative_standard_error(self) -> float:
        runs = len(self.relative_prevalences)
        return float(np.std(self.relative_prevalences, ddof=1) / np.sqrt(runs)) if runs > 1 else 0.0


@dataclass(frozen=True, eq=False)
class ScenarioSet:
    """
    Value Object: Outcomes of a batch of scenarios.
    """

    outcomes: tuple[ScenarioOutcome, ...]

    def __getitem__(self, name: str) -> ScenarioOutcome:
        for outcome in self.outcomes:
            if outcome.scenario.name == name:
                return outcome
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [outcome.scenario.name for outcome in self.outcomes]

    def summary_frame(self) -> pd.DataFrame:
        """One row per scenario with means and the paired standard error."""
        return pd.DataFrame(
            [
                {
                    "scenario": outcome.scenario.name,
                    "eta": outcome.scenario.params.eta,
                    "lambda": outcome.scenario.params.delay_rate,
                    "mean_prevalence": outcome.mean_prevalence,
                    "mean_relative_prevalence": outcome.mean_relative_prevalence,
                    "relative_standard_error": outcome.relative_standard_error,
                    "ctx_time": outcome.ctx_time,
                }
                for outcome in self.outcomes
            ]
        )

    def runs_frame(self) -> pd.DataFrame:
        """Long table of per-run values: scenario, run, prevalence, relative_prevalence."""
        return pd.concat(
            [
                pd.DataFrame(
                    {
                        "scenario": outcome.scenario.name,
                        "run": np.arange(len(outcome.run_prevalences)),
                        "prevalence": outcome.run_prevalences,
                        "relative_prevalence": outcome.relative_prevalences,
                    }
                )
                for outcome in self.outcomes
            ],
            ignore_index=True,
        )
