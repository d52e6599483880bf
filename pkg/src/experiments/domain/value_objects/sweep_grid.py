"""
Experiments Domain Value Objects - Sweep Grid and Strategy Differential.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from src.shared.domain.enums import TargetStrategy
from src.shared.domain.exceptions import InvalidParameterError


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """
    Value Object: Mean prevalence over a two-parameter grid.

    Rows follow axis1 (strength), columns axis2 (contagiousness, scale or
    stage). relative_prevalence[i, j] = prevalence[i, j] / baseline[j], the
    baseline being the no-intervention prevalence of column j.
    """

    axis1_name: str
    axis1_values: tuple[float, ...]
    axis2_name: str
    axis2_values: tuple[float, ...]
    prevalence: np.ndarray
    std: np.ndarray
    baseline: np.ndarray
    label: str = ""

    def __post_init__(self):
        shape = (len(self.axis1_values), len(self.axis2_values))
        if self.prevalence.shape != shape or self.std.shape != shape or self.baseline.shape != (shape[1],):
            raise InvalidParameterError("Sweep matrices do not match the axes.")

    @property
    def relative_prevalence(self) -> np.ndarray:
        return self.prevalence / self.baseline[np.newaxis, :]

    def to_frame(self) -> pd.DataFrame:
        """Long table: axis1, axis2, prevalence, relative_prevalence, std."""
        rows, cols = np.meshgrid(np.arange(len(self.axis1_values)), np.arange(len(self.axis2_values)), indexing="ij")
        return pd.DataFrame(
            {
                self.axis1_name: np.asarray(self.axis1_values)[rows.ravel()],
                self.axis2_name: np.asarray(self.axis2_values)[cols.ravel()],
                "prevalence": self.prevalence.ravel(),
                "relative_prevalence": self.relative_prevalence.ravel(),
                "std": self.std.ravel(),
            }
        )


@dataclass(frozen=True, eq=False)
class StrategyDifferential:
    """
    Value Object: Delta rho_X = rho_Random - rho_X over (epsilon, delta).

    Both grids come from the same run budget and master seed; the standard
    error is that of the paired per-run differences.
    """

    strategy: TargetStrategy
    eps_values: tuple[float, ...]
    delta_values: tuple[float, ...]
    prevalence: np.ndarray
    random_prevalence: np.ndarray
    standard_error: np.ndarray

    @property
    def delta_rho(self) -> np.ndarray:
        return self.random_prevalence - self.prevalence

    def to_frame(self) -> pd.DataFrame:
        """Long table: strategy, epsilon, delta, prevalence, random_prevalence, delta_rho, standard_error."""
        rows, cols = np.meshgrid(np.arange(len(self.eps_values)), np.arange(len(self.delta_values)), indexing="ij")
        return pd.DataFrame(
            {
                "strategy": self.strategy.value,
                "epsilon": np.asarray(self.eps_values)[rows.ravel()],
                "delta": np.asarray(self.delta_values)[cols.ravel()],
                "prevalence": self.prevalence.ravel(),
                "random_prevalence": self.random_prevalence.ravel(),
                "delta_rho": self.delta_rho.ravel(),
                "standard_error": self.standard_error.ravel(),
            }
        )
