"""
Domain Service - Monte Carlo orchestration of CTIC runs.
"""

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from src.interventions.domain.value_objects import InterventionPlan
from src.shared.domain.constants import SimulationDefaults
from src.shared.domain.exceptions import InvalidParameterError
from src.shared.domain.validation import require_positive
from src.shared.infrastructure import get_logger
from src.diffusion.domain.services.ctic_simulator import CTICSimulator
from src.diffusion.domain.services.run_seed_service import TARGET_STREAM, derive_run_seed
from src.diffusion.domain.value_objects import MonteCarloSummary

logger = get_logger(__name__)

RunOutcome = tuple[np.ndarray, np.ndarray]  # (active node ids ascending, activation times ascending)


def _run_chunk(
    simulator: CTICSimulator,
    plan: InterventionPlan,
    seed_node: int,
    ctx_time: float | None,
    master_seed: int,
    run_indices: list[int],
    fixed_targets: np.ndarray | None,
) -> list[RunOutcome]:
    """Run a contiguous block of runs; module level so process pools can pickle it."""
    redraw = plan.prebunk is not None and plan.prebunk.redraw_per_run
    outcomes: list[RunOutcome] = []
    for run_index in run_indices:
        targets = fixed_targets
        if redraw:
            targets = simulator.resolve_targets(plan, seed_node, derive_run_seed(master_seed, run_index, TARGET_STREAM))
        result = simulator.simulate(plan, seed_node, ctx_time, derive_run_seed(master_seed, run_index), targets)
        outcomes.append((np.flatnonzero(result.active_mask), result.sorted_times))
    return outcomes


def automatic_time_grid(outcomes: list[RunOutcome], resolution: float) -> np.ndarray:
    """
    Uniform grid from 0 to the latest activation time of a batch.

    Args:
        outcomes: Per-run outcomes.
        resolution: Grid step in hours.

    Returns:
        np.ndarray: Grid whose last point is at or after every activation.
    """
    resolution = require_positive("time_resolution", resolution)
    horizon = max((float(times[-1]) for _, times in outcomes if len(times)), default=0.0)
    steps = int(np.ceil(horizon / resolution))
    return np.arange(steps + 1) * resolution


class MonteCarloRunner:
    """
    Domain Service: Independent CTIC runs with per-run derived seeds.

    Business Rules:
    - Run i uses derive_run_seed(master_seed, i), so results do not depend on workers
    - Random prebunk targets are re-drawn per run from a separate stream unless fixed
    - Aggregation follows run-index order
    """

    def __init__(self, simulator: CTICSimulator, workers: int = 1):
        if int(workers) < 1:
            raise InvalidParameterError(f"workers must be >= 1, got {workers!r}.")
        self._simulator = simulator
        self._workers = int(workers)

    @property
    def simulator(self) -> CTICSimulator:
        return self._simulator

    def sample(
        self,
        plan: InterventionPlan,
        seed_node: int,
        runs: int,
        master_seed: int,
        ctx_time: float | None = None,
    ) -> list[RunOutcome]:
        """
        Execute the runs and return their outcomes in run-index order.

        Args:
            plan: Interventions.
            seed_node: Diffusion seed.
            runs: Number of runs (>= 1).
            master_seed: Batch seed.
            ctx_time: Resolved contextualization time.

        Returns:
            list[RunOutcome]: One outcome per run.
        """
        if int(runs) < 1:
            raise InvalidParameterError(f"runs must be >= 1, got {runs!r}.")
        runs = int(runs)
        seed_node = self._simulator.graph.check_node(seed_node)

        fixed_targets = None
        if plan.prebunk is not None and not plan.prebunk.redraw_per_run:
            fixed_targets = self._simulator.resolve_targets(plan, seed_node)

        workers = min(self._workers, runs)
        if workers == 1:
            return _run_chunk(self._simulator, plan, seed_node, ctx_time, master_seed, list(range(runs)), fixed_targets)

        chunks = [chunk.tolist() for chunk in np.array_split(np.arange(runs), workers)]
        logger.debug("Dispatching %d runs to %d worker processes", runs, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_chunk, self._simulator, plan, seed_node, ctx_time, master_seed, chunk, fixed_targets)
                for chunk in chunks
            ]
            return [outcome for future in futures for outcome in future.result()]

    def run(
        self,
        plan: InterventionPlan,
        seed_node: int,
        runs: int,
        master_seed: int,
        ctx_time: float | None = None,
        time_grid=None,
        keep_active_sets: bool = False,
    ) -> MonteCarloSummary:
        """
        Monte Carlo summary of a plan.

        Args:
            plan: Interventions.
            seed_node: Diffusion seed.
            runs: Number of runs.
            master_seed: Batch seed.
            ctx_time: Resolved contextualization time.
            time_grid: Sorted non-negative sample times of the mean curve (automatic 0.5 h grid when omitted).
            keep_active_sets: Keep each run's final active node set.

        Returns:
            MonteCarloSummary: Aggregated result.
        """
        outcomes = self.sample(plan, seed_node, runs, master_seed, ctx_time)
        if time_grid is None:
            time_grid = automatic_time_grid(outcomes, SimulationDefaults.CTX_TIME_RESOLUTION_HOURS)
        return summarize(outcomes, self._simulator.graph.node_count, time_grid, keep_active_sets, ctx_time)


def summarize(
    outcomes: list[RunOutcome],
    node_count: int,
    time_grid,
    keep_active_sets: bool = False,
    ctx_time: float | None = None,
) -> MonteCarloSummary:
    """
    Reduce run outcomes to a summary.

    Args:
        outcomes: Per-run outcomes in run-index order.
        node_count: Number of nodes of the graph.
        time_grid: Sorted non-negative sample times.
        keep_active_sets: Keep each run's final active node set.
        ctx_time: Contextualization time used by the runs.

    Returns:
        MonteCarloSummary: Mean curve over the grid and per-run final prevalences.
    """
    grid = np.asarray(time_grid, dtype=float)
    if grid.ndim != 1 or len(grid) == 0 or np.any(grid < 0) or np.any(np.diff(grid) < 0):
        raise InvalidParameterError("time_grid must be a nonempty sorted list of non-negative times.")

    counts = np.stack([np.searchsorted(times, grid, side="right") for _, times in outcomes])
    prevalences = np.array([len(active) for active, _ in outcomes], dtype=float) / node_count
    return MonteCarloSummary(
        node_count=node_count,
        time_grid=grid,
        mean_curve=counts.mean(axis=0) / node_count,
        run_prevalences=prevalences,
        run_active_sets=tuple(active for active, _ in outcomes) if keep_active_sets else None,
        ctx_time=ctx_time,
    )
