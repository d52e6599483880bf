"""
Domain Service - Stage-matched contextualization time.

T(eta, phi) = inf { t >= 0 : rho_t >= phi * rho }, evaluated on the mean
no-intervention prevalence curve of a dedicated Monte Carlo batch.
"""

import numpy as np

from src.interventions.domain.value_objects import InterventionPlan
from src.shared.domain.constants import SimulationDefaults
from src.shared.domain.validation import require_positive, require_unit_interval
from src.shared.infrastructure import get_logger
from src.diffusion.domain.services.monte_carlo_service import MonteCarloRunner, automatic_time_grid, summarize

logger = get_logger(__name__)

_RELATIVE_SLACK = 1e-12


class ContextTimeService:
    """
    Domain Service: Resolves T from the no-intervention curve.
    """

    @staticmethod
    def resolve_ctx_time(
        runner: MonteCarloRunner,
        seed_node: int,
        phi: float,
        runs: int = SimulationDefaults.CTX_TIME_RUNS,
        master_seed: int = 0,
        time_resolution: float = SimulationDefaults.CTX_TIME_RESOLUTION_HOURS,
    ) -> float:
        """
        Earliest grid time where the mean prevalence reaches phi times its final value.

        Args:
            runner: Monte Carlo runner bound to the graph and parameters.
            seed_node: Diffusion seed.
            phi: Diffusion stage in [0, 1].
            runs: Size of the no-intervention batch.
            master_seed: Batch seed.
            time_resolution: Grid step in hours.

        Returns:
            float: T in hours (a multiple of time_resolution).
        """
        phi = require_unit_interval("phi", phi)
        time_resolution = require_positive("time_resolution", time_resolution)

        outcomes = runner.sample(InterventionPlan.none(), seed_node, runs, master_seed)
        grid = automatic_time_grid(outcomes, time_resolution)
        summary = summarize(outcomes, runner.simulator.graph.node_count, grid)

        target = phi * summary.mean_prevalence
        reached = np.flatnonzero(summary.mean_curve >= target * (1.0 - _RELATIVE_SLACK))
        ctx_time = float(grid[reached[0]]) if len(reached) else float(grid[-1])
        logger.info(
            "Resolved contextualization time T=%.2f h (phi=%.2f, eta=%.4f, rho=%.4f, %d runs)",
            ctx_time,
            phi,
            runner.simulator.params.eta,
            summary.mean_prevalence,
            runs,
        )
        return ctx_time
