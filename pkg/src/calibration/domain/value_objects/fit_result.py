"""
Calibration Domain Value Objects - Fit Result and Strength Estimate.
"""

from dataclasses import dataclass, field

import numpy as np
import pandas as pd


@dataclass(frozen=True, eq=False)
class FitResult:
    """
    Value Object: Grid-search fit of (eta, lambda).

    `loss_surface` has columns eta, lambda, loss; the best cell attains its
    minimum, ties broken by smaller eta, then smaller lambda.
    """

    eta_hat: float
    lambda_hat: float
    loss: float
    loss_surface: pd.DataFrame
    time_grid: np.ndarray
    empirical_curve: np.ndarray
    fitted_curve: np.ndarray
    seed_node: int
    runs_per_cell: int
    master_seed: int

    def curves_frame(self) -> pd.DataFrame:
        """Empirical and best simulated mean cumulative counts on the loss grid."""
        return pd.DataFrame(
            {"time": self.time_grid, "empirical_count": self.empirical_curve, "simulated_count": self.fitted_curve}
        )

    def to_dict(self) -> dict:
        return {
            "eta_hat": self.eta_hat,
            "lambda_hat": self.lambda_hat,
            "loss": self.loss,
            "seed_node": self.seed_node,
            "runs_per_cell": self.runs_per_cell,
            "master_seed": self.master_seed,
            "cells": len(self.loss_surface),
        }


@dataclass(frozen=True, eq=False)
class StrengthEstimate:
    """
    Value Object: Suppression rates e(a) from a randomized survey.

    `per_item` has columns item_id, control_mean, treatment_mean,
    suppression_rate (and study_id when the survey names studies).
    """

    per_item: pd.DataFrame
    mean_epsilon: float
    excluded_items: list[tuple[str, float]]
    control_floor: float
    per_study: dict[str, float] = field(default_factory=dict)

    @property
    def mean_of_study_means(self) -> float | None:
        """Unweighted mean of the per-study means (None without study ids)."""
        if not self.per_study:
            return None
        return float(np.mean(list(self.per_study.values())))

    def to_dict(self) -> dict:
        return {
            "mean_epsilon": self.mean_epsilon,
            "control_floor": self.control_floor,
            "retained_items": len(self.per_item),
            "excluded_items": [{"item_id": item, "control_mean": mean} for item, mean in self.excluded_items],
            "per_study": self.per_study,
            "mean_of_study_means": self.mean_of_study_means,
            "per_item": self.per_item.to_dict(orient="records"),
        }
