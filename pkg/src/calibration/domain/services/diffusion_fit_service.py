"""
Domain Service - Grid-search fit of the diffusion parameters.

Every cell uses the same master seed, so all cells share their random
numbers. Without interventions the active set does not depend on the delay
rate and activation times scale as 1/lambda, so each eta is simulated once at
lambda = 1 and its times are rescaled for every lambda of the grid.
"""

import numpy as np
import pandas as pd

from src.graph.domain.entities import DirectedGraph
from src.graph.domain.services import GraphStructureService
from src.interventions.domain.value_objects import InterventionPlan
from src.shared.domain.constants import CalibrationDefaults
from src.shared.domain.exceptions import InvalidParameterError
from src.shared.infrastructure import get_logger
from src.diffusion.domain.services import CTICSimulator, MonteCarloRunner
from src.diffusion.domain.value_objects import DiffusionParams
from src.calibration.domain.services.cascade_curve_service import CascadeCurveService
from src.calibration.domain.value_objects import CascadeRecord, FitResult

logger = get_logger(__name__)


def loss_grid(window_hours: float, step_hours: float = CalibrationDefaults.LOSS_STEP_HOURS) -> np.ndarray:
    """Uniform grid over [0, window_hours]."""
    steps = int(round(window_hours / step_hours))
    return np.arange(steps + 1) * step_hours


class DiffusionFitService:
    """
    Domain Service: Curve-matching fit of (eta, lambda).

    Business Rules:
    - Seed: the node with the largest out-degree
    - Loss: Euclidean distance between mean cumulative counts on a 1 h grid over [0, window]
    - Ties: smaller eta, then smaller lambda
    """

    @staticmethod
    def fit_diffusion_params(
        graph: DirectedGraph,
        cascades: list[CascadeRecord],
        eta_grid=CalibrationDefaults.ETA_GRID,
        lambda_grid=CalibrationDefaults.LAMBDA_GRID,
        loss_window_hours: float = CalibrationDefaults.LOSS_WINDOW_HOURS,
        runs_per_cell: int = CalibrationDefaults.RUNS_PER_CELL,
        master_seed: int = 0,
        count_root: bool = True,
        workers: int = 1,
    ) -> FitResult:
        """
        Fit (eta, lambda) to the average cumulative count of the cascades.

        Args:
            graph: Calibration network with susceptibilities.
            cascades: Observed cascades.
            eta_grid: Candidate contagiousness values.
            lambda_grid: Candidate delay rates.
            loss_window_hours: Measurement window.
            runs_per_cell: Monte Carlo runs per eta.
            master_seed: Seed shared by every cell.
            count_root: Count the root event of each cascade.
            workers: Worker processes.

        Returns:
            FitResult: Best cell, loss surface and both curves.
        """
        etas = sorted(float(eta) for eta in eta_grid)
        lambdas = sorted(float(rate) for rate in lambda_grid)
        if not etas or not lambdas:
            raise InvalidParameterError("Calibration grids must be nonempty.")
        for rate in lambdas:
            DiffusionParams(eta=etas[0], delay_rate=rate)

        grid = loss_grid(loss_window_hours)
        empirical = CascadeCurveService.empirical_mean_curve(cascades, grid, count_root)
        seed_node = GraphStructureService.max_out_degree_node(graph)
        logger.info(
            "Fitting %d x %d grid on %d cascades (seed %s, %d runs per eta)",
            len(etas),
            len(lambdas),
            len(cascades),
            graph.id_map.to_external(seed_node),
            runs_per_cell,
        )

        rows = []
        best: tuple[float, float, float, np.ndarray] | None = None
        for eta in etas:
            runner = MonteCarloRunner(CTICSimulator(graph, DiffusionParams(eta, 1.0)), workers=workers)
            outcomes = runner.sample(InterventionPlan.none(), seed_node, runs_per_cell, master_seed)
            unit_times = [times for _, times in outcomes]
            for rate in lambdas:
                simulated = np.mean([np.searchsorted(times / rate, grid, side="right") for times in unit_times], axis=0)
                loss = float(np.linalg.norm(simulated - empirical))
                rows.append({"eta": eta, "lambda": rate, "loss": loss})
                if best is None or loss < best[2]:
                    best = (eta, rate, loss, simulated)

        eta_hat, lambda_hat, loss, fitted = best
        logger.info("Best cell eta=%.4f lambda=%.3f (loss %.4f)", eta_hat, lambda_hat, loss)
        return FitResult(
            eta_hat=eta_hat,
            lambda_hat=lambda_hat,
            loss=loss,
            loss_surface=pd.DataFrame(rows, columns=["eta", "lambda", "loss"]),
            time_grid=grid,
            empirical_curve=empirical,
            fitted_curve=fitted,
            seed_node=seed_node,
            runs_per_cell=int(runs_per_cell),
            master_seed=int(master_seed),
        )
