"""
Domain Service - Continuous-Time Independent Cascade simulator.

Event-driven: a newly active node schedules one delivery per out-edge with an
Exp(lambda) delay; a delivery to an inactive node succeeds when the edge's
uniform variate falls below eta * s_v(t). Every run draws one delay and one
uniform per edge up front (delays first, then uniforms), so runs with the same
seed share their random numbers across intervention settings.
"""

import heapq
import math

import numpy as np

from src.graph.domain.entities import DirectedGraph
from src.interventions.domain.services import SusceptibilityModifierService, TargetSelectionService
from src.interventions.domain.value_objects import InterventionPlan
from src.shared.domain.enums import SuccessEvaluation
from src.shared.domain.exceptions import InvalidParameterError
from src.shared.infrastructure import get_logger
from src.diffusion.domain.value_objects import DiffusionParams, SimulationResult

logger = get_logger(__name__)


class CTICSimulator:
    """
    Domain Service: Runs single CTIC cascades on a fixed graph.

    The queue holds (time, target, source, edge); ties in delivery time break
    by target id, then source id. Active state is absorbing and the run ends
    when the queue is exhausted.
    """

    def __init__(
        self,
        graph: DirectedGraph,
        params: DiffusionParams,
        evaluation: SuccessEvaluation = SuccessEvaluation.DELIVERY,
    ):
        self._graph = graph
        self._params = params
        self._evaluation = SuccessEvaluation(evaluation)

    @property
    def graph(self) -> DirectedGraph:
        return self._graph

    @property
    def params(self) -> DiffusionParams:
        return self._params

    @property
    def evaluation(self) -> SuccessEvaluation:
        return self._evaluation

    def resolve_targets(
        self,
        plan: InterventionPlan,
        seed_node: int,
        rng_seed: int | np.random.SeedSequence | None = None,
    ) -> np.ndarray | None:
        """
        Prebunk target set of a plan (None without prebunking).

        Args:
            plan: Interventions.
            seed_node: Diffusion seed.
            rng_seed: Seed for RANDOM targets; the plan's own seed when omitted.

        Returns:
            np.ndarray | None: Target ids.
        """
        if plan.prebunk is None:
            return None
        return TargetSelectionService.resolve_targets(
            self._graph,
            plan.prebunk.delta,
            plan.prebunk.strategy,
            seed_node=seed_node,
            rng_seed=plan.prebunk.rng_seed if rng_seed is None else rng_seed,
        )

    def simulate(
        self,
        plan: InterventionPlan,
        seed_node: int,
        ctx_time: float | None = None,
        rng_seed: int | np.random.SeedSequence = 0,
        targets: np.ndarray | None = None,
    ) -> SimulationResult:
        """
        Run one cascade.

        Args:
            plan: Interventions in effect.
            seed_node: Internal id of the initially active node.
            ctx_time: Contextualization start T in hours (taken from the plan when it holds an explicit time).
            rng_seed: Seed of the edge draws.
            targets: Pre-resolved prebunk targets (resolved from the plan when omitted).

        Returns:
            SimulationResult: Activation times of this run.

        Raises:
            InvalidParameterError: On an invalid seed or an unresolved contextualization time.
        """
        graph = self._graph
        seed_node = graph.check_node(seed_node)
        ctx_time = self._context_start(plan, ctx_time)

        if plan.prebunk is not None and targets is None:
            targets = self.resolve_targets(plan, seed_node)

        pre = SusceptibilityModifierService.pre_diffusion_susceptibility(graph.susceptibility, plan, targets)
        post = SusceptibilityModifierService.post_context_susceptibility(pre, plan)
        before = self._params.eta * pre
        after = self._params.eta * post
        threshold_start = math.inf if ctx_time is None else ctx_time

        rng = np.random.default_rng(rng_seed)
        delays = rng.standard_exponential(graph.edge_count) / self._params.delay_rate
        uniforms = rng.random(graph.edge_count)

        indptr = graph.out_indptr
        indices = graph.out_indices
        activation = np.full(graph.node_count, np.nan)
        active = np.zeros(graph.node_count, dtype=bool)
        activation[seed_node] = 0.0
        active[seed_node] = True

        queue: list[tuple[float, int, int, int]] = []
        self._schedule(queue, seed_node, 0.0, indptr, indices, delays, active)

        at_delivery = self._evaluation is SuccessEvaluation.DELIVERY
        while queue:
            time, target, source, edge = heapq.heappop(queue)
            if active[target]:
                continue
            reference = time if at_delivery else activation[source]
            threshold = after[target] if reference >= threshold_start else before[target]
            if uniforms[edge] < threshold:
                active[target] = True
                activation[target] = time
                self._schedule(queue, target, time, indptr, indices, delays, active)

        return SimulationResult(activation_time=activation, seed_node=seed_node, ctx_time=ctx_time)

    @staticmethod
    def _schedule(queue, node, time, indptr, indices, delays, active) -> None:
        """Push one delivery per out-edge of a newly active node (edges into active nodes are no-ops)."""
        start, stop = int(indptr[node]), int(indptr[node + 1])
        if start == stop:
            return
        edges = np.arange(start, stop)
        pending = ~active[indices[start:stop]]
        arrivals = time + delays[start:stop]
        for edge, target, arrival in zip(
            edges[pending].tolist(), indices[start:stop][pending].tolist(), arrivals[pending].tolist(), strict=True
        ):
            heapq.heappush(queue, (arrival, target, node, edge))

    @staticmethod
    def _context_start(plan: InterventionPlan, ctx_time: float | None) -> float | None:
        """Contextualization start time, validated against the plan."""
        if plan.contextualize is None:
            return None
        if ctx_time is None:
            ctx_time = plan.contextualize.explicit_time
        if ctx_time is None:
            raise InvalidParameterError(
                "Contextualization staged by phi needs a resolved ctx_time; run resolve_ctx_time first."
            )
        if not ctx_time >= 0.0:
            raise InvalidParameterError(f"ctx_time must be >= 0, got {ctx_time!r}.")
        return float(ctx_time)
