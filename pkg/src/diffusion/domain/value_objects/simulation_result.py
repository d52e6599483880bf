"""
Diffusion Domain Value Objects - Simulation Result and Monte Carlo Summary.
"""

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from src.shared.domain.exceptions import InvalidParameterError


@dataclass(frozen=True, eq=False)
class SimulationResult:
    """
    Value Object: Outcome of one CTIC run.

    `activation_time` holds hours per node, NaN for nodes that never activate.

    Invariants:
    - the seed has activation time 0
    - final_prevalence = active count / node_count >= 1 / node_count
    """

    activation_time: np.ndarray
    seed_node: int
    ctx_time: float | None = None

    def __post_init__(self):
        times = np.asarray(self.activation_time, dtype=float)
        if not 0 <= self.seed_node < len(times) or times[self.seed_node] != 0.0:
            raise InvalidParameterError("The seed must be active at time 0.")
        times.setflags(write=False)
        object.__setattr__(self, "activation_time", times)

    @property
    def node_count(self) -> int:
        return len(self.activation_time)

    @property
    def active_mask(self) -> np.ndarray:
        """Boolean mask of activated nodes."""
        return ~np.isnan(self.activation_time)

    @property
    def active_count(self) -> int:
        return int(self.active_mask.sum())

    @property
    def final_prevalence(self) -> float:
        """Fraction of nodes ever activated."""
        return self.active_count / self.node_count

    @property
    def sorted_times(self) -> np.ndarray:
        """Activation times of active nodes, ascending."""
        return np.sort(self.activation_time[self.active_mask])

    @property
    def curve(self) -> list[tuple[float, int]]:
        """Step points (time, cumulative active count), one per activation."""
        times = self.sorted_times
        return list(zip(times.tolist(), range(1, len(times) + 1), strict=True))

    def count_at(self, time_grid) -> np.ndarray:
        """Cumulative active count at each grid time (right-continuous steps)."""
        return np.searchsorted(self.sorted_times, np.asarray(time_grid, dtype=float), side="right")

    def activation_frame(self, external_ids: tuple[str, ...] | None = None) -> pd.DataFrame:
        """
        Activation table of the active nodes, ordered by time then node.

        Args:
            external_ids: Id map for the node column (internal ids when omitted).

        Returns:
            pd.DataFrame: Columns node_id, time.
        """
        active = np.flatnonzero(self.active_mask)
        times = self.activation_time[active]
        order = np.lexsort((active, times))
        nodes = active[order]
        node_ids = [external_ids[node] for node in nodes] if external_ids is not None else nodes
        return pd.DataFrame({"node_id": node_ids, "time": times[order]})

    def curve_frame(self) -> pd.DataFrame:
        """Curve table with columns time, active_fraction."""
        times = self.sorted_times
        return pd.DataFrame({"time": times, "active_fraction": np.arange(1, len(times) + 1) / self.node_count})


@dataclass(frozen=True, eq=False)
class MonteCarloSummary:
    """
    Value Object: Aggregate over independent runs.

    `run_prevalences` is in run-index order; `run_active_sets` is filled only
    when per-run sets were requested.
    """

    node_count: int
    time_grid: np.ndarray
    mean_curve: np.ndarray
    run_prevalences: np.ndarray
    run_active_sets: tuple[np.ndarray, ...] | None = field(default=None, repr=False)
    ctx_time: float | None = None

    @property
    def runs(self) -> int:
        return len(self.run_prevalences)

    @property
    def mean_prevalence(self) -> float:
        return float(np.mean(self.run_prevalences))

    @property
    def prevalence_std(self) -> float:
        """Sample standard deviation of final prevalence (0 for one run)."""
        if self.runs < 2:
            return 0.0
        return float(np.std(self.run_prevalences, ddof=1))

    @property
    def standard_error(self) -> float:
        return self.prevalence_std / np.sqrt(self.runs)

    def curve_frame(self) -> pd.DataFrame:
        """Mean curve table with columns time, active_fraction."""
        return pd.DataFrame({"time": self.time_grid, "active_fraction": self.mean_curve})

    def to_dict(self) -> dict:
        """Summary fields for the JSON report."""
        return {
            "runs": self.runs,
            "node_count": self.node_count,
            "mean_prevalence": self.mean_prevalence,
            "prevalence_std": self.prevalence_std,
            "standard_error": self.standard_error,
            "ctx_time": self.ctx_time,
        }
