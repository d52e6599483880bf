"""
Diffusion Application Service.
"""

from src.graph.domain.entities import DirectedGraph
from src.interventions.domain.value_objects import InterventionPlan
from src.shared.application.services import BaseService
from src.shared.domain.constants import SimulationDefaults
from src.shared.domain.enums import SuccessEvaluation
from src.shared.domain.events import IDomainEventPublisher
from src.shared.infrastructure import get_logger
from src.diffusion.domain.services import ContextTimeService, CTICSimulator, MonteCarloRunner, SeedSelectionService
from src.diffusion.domain.value_objects import DiffusionParams, MonteCarloSummary, SimulationResult

logger = get_logger(__name__)


class DiffusionService(BaseService):
    """
    Application Service for running cascades on one network.

    Coordinates workflow:
    1. Resolve the contextualization time T when a plan stages it by phi (cached per params, seed and phi)
    2. Run single cascades or Monte Carlo batches
    3. Select the diffusion seed
    """

    def __init__(
        self,
        graph: DirectedGraph,
        evaluation: SuccessEvaluation = SuccessEvaluation.DELIVERY,
        workers: int = 1,
        ctx_runs: int = SimulationDefaults.CTX_TIME_RUNS,
        ctx_resolution: float = SimulationDefaults.CTX_TIME_RESOLUTION_HOURS,
        event_bus: IDomainEventPublisher | None = None,
    ):
        super().__init__(repository=None, event_bus=event_bus)
        self._graph = graph
        self._evaluation = SuccessEvaluation(evaluation)
        self._workers = workers
        self._ctx_runs = ctx_runs
        self._ctx_resolution = ctx_resolution
        self._ctx_cache: dict[tuple, float] = {}

    @property
    def graph(self) -> DirectedGraph:
        return self._graph

    def runner(self, params: DiffusionParams) -> MonteCarloRunner:
        """Monte Carlo runner bound to this network and the given parameters."""
        return MonteCarloRunner(CTICSimulator(self._graph, params, self._evaluation), workers=self._workers)

    def select_seed(self, relax: bool = False) -> int:
        """Use case: Pick the most connected fully susceptible node."""
        seed_node = SeedSelectionService.select_seed(self._graph, relax=relax)
        logger.info(
            "Selected seed %s (internal %d, out-degree %d, s=%.3f)",
            self._graph.id_map.to_external(seed_node),
            seed_node,
            int(self._graph.out_degrees()[seed_node]),
            float(self._graph.susceptibility[seed_node]),
        )
        return seed_node

    def resolve_ctx_time(self, params: DiffusionParams, seed_node: int, phi: float, master_seed: int = 0) -> float:
        """
        Use case: T(eta, phi) from the no-intervention curve, resolved once and reused.

        Args:
            params: Diffusion parameters.
            seed_node: Diffusion seed.
            phi: Diffusion stage.
            master_seed: Seed of the no-intervention batch.

        Returns:
            float: T in hours.
        """
        key = (params, int(seed_node), float(phi), int(master_seed), self._ctx_runs, self._ctx_resolution)
        if key not in self._ctx_cache:
            self._ctx_cache[key] = ContextTimeService.resolve_ctx_time(
                self.runner(params),
                seed_node,
                phi,
                runs=self._ctx_runs,
                master_seed=master_seed,
                time_resolution=self._ctx_resolution,
            )
        return self._ctx_cache[key]

    def ctx_time_for(
        self, params: DiffusionParams, plan: InterventionPlan, seed_node: int, master_seed: int = 0
    ) -> float | None:
        """Contextualization time a plan needs (None without contextualization)."""
        if plan.contextualize is None:
            return None
        if plan.contextualize.phi is None:
            return plan.contextualize.explicit_time
        return self.resolve_ctx_time(params, seed_node, plan.contextualize.phi, master_seed)

    def simulate(
        self,
        params: DiffusionParams,
        plan: InterventionPlan,
        seed_node: int,
        rng_seed: int = 0,
        ctx_time: float | None = None,
    ) -> SimulationResult:
        """
        Use case: One cascade.

        Args:
            params: Diffusion parameters.
            plan: Interventions.
            seed_node: Diffusion seed.
            rng_seed: Seed of the edge draws (also seeds the T batch when phi is used).
            ctx_time: Pre-resolved T; resolved from the plan when omitted.

        Returns:
            SimulationResult: Activation times.
        """
        if ctx_time is None:
            ctx_time = self.ctx_time_for(params, plan, seed_node, rng_seed)
        simulator = CTICSimulator(self._graph, params, self._evaluation)
        result = simulator.simulate(plan, seed_node, ctx_time=ctx_time, rng_seed=rng_seed)
        logger.info("Cascade reached %d of %d nodes", result.active_count, result.node_count)
        return result

    def monte_carlo(
        self,
        params: DiffusionParams,
        plan: InterventionPlan,
        seed_node: int,
        runs: int,
        master_seed: int = 0,
        time_grid=None,
        ctx_time: float | None = None,
        keep_active_sets: bool = False,
    ) -> MonteCarloSummary:
        """
        Use case: Monte Carlo batch.

        Args:
            params: Diffusion parameters.
            plan: Interventions.
            seed_node: Diffusion seed.
            runs: Number of runs.
            master_seed: Batch seed.
            time_grid: Sample times of the mean curve.
            ctx_time: Pre-resolved T; resolved from the plan when omitted.
            keep_active_sets: Keep per-run final active sets.

        Returns:
            MonteCarloSummary: Aggregated result.
        """
        if ctx_time is None:
            ctx_time = self.ctx_time_for(params, plan, seed_node, master_seed)
        summary = self.runner(params).run(
            plan,
            seed_node,
            runs,
            master_seed,
            ctx_time=ctx_time,
            time_grid=time_grid,
            keep_active_sets=keep_active_sets,
        )
        logger.debug(
            "eta=%.4f lambda=%.3f plan=%s: rho=%.5f +/- %.5f over %d runs",
            params.eta,
            params.delay_rate,
            plan.to_dict(),
            summary.mean_prevalence,
            summary.standard_error,
            summary.runs,
        )
        return summary
