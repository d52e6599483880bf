"""
Experiments Application Service.

Every cell of a grid runs with the same master seed, so cells differ only
through the intervention: runs are paired by index across the whole grid.
"""

import numpy as np

from src.interventions.domain.value_objects import InterventionPlan
from src.shared.application.services import BaseService
from src.shared.domain.enums import InterventionKind, TargetStrategy
from src.shared.domain.events import IDomainEventPublisher
from src.shared.domain.exceptions import InvalidParameterError
from src.shared.infrastructure import get_logger
from src.diffusion.application.services import DiffusionService
from src.diffusion.domain.value_objects import DiffusionParams, MonteCarloSummary
from src.experiments.domain.services import ExperimentGridService
from src.experiments.domain.value_objects import Scenario, ScenarioOutcome, ScenarioSet, StrategyDifferential, SweepGrid

logger = get_logger(__name__)


class ExperimentService(BaseService):
    """
    Application Service for the sweep, targeting and scenario experiments.

    Coordinates workflow:
    1. Run the no-intervention baseline of each column with the grid's master seed
    2. Resolve the contextualization time per (eta, phi) when needed
    3. Run one Monte Carlo batch per cell and assemble the grid in index order
    """

    def __init__(self, diffusion: DiffusionService, event_bus: IDomainEventPublisher | None = None):
        super().__init__(repository=None, event_bus=event_bus)
        self._diffusion = diffusion

    def _batch(
        self, params: DiffusionParams, plan: InterventionPlan, seed_node: int, runs: int, master_seed: int
    ) -> MonteCarloSummary:
        return self._diffusion.monte_carlo(params, plan, seed_node, runs, master_seed, time_grid=[0.0])

    def sweep_strength_vs_contagiousness(
        self,
        intervention_kind: InterventionKind,
        eps_grid,
        eta_grid,
        delay_rate: float,
        seed_node: int,
        runs: int,
        master_seed: int = 0,
        delta: float = 1.0,
        phi: float = 0.0,
        strategy: TargetStrategy = TargetStrategy.RANDOM,
    ) -> SweepGrid:
        """
        Use case: Prevalence over strength x contagiousness.

        Args:
            intervention_kind: nudge, prebunk or contextualize.
            eps_grid: Ascending strengths.
            eta_grid: Ascending contagiousness values.
            delay_rate: Fixed lambda.
            seed_node: Diffusion seed.
            runs: Runs per cell.
            master_seed: Seed shared by every cell.
            delta: Fixed prebunking scale.
            phi: Fixed contextualization stage (T resolved per eta).
            strategy: Prebunking targeting.

        Returns:
            SweepGrid: Rows epsilon, columns eta.
        """
        kind = InterventionKind(intervention_kind)
        eps_values = ExperimentGridService.require_sorted("eps_grid", eps_grid)
        eta_values = ExperimentGridService.require_sorted("eta_grid", eta_grid)

        def plan_for(epsilon: float, _column: float) -> InterventionPlan:
            return InterventionPlan.single(kind, epsilon, delta=delta, strategy=strategy, phi=phi)

        return self._grid(
            label=f"{kind.value}-eps-eta",
            axis1=("epsilon", eps_values),
            axis2=("eta", eta_values),
            params_for=lambda eta: DiffusionParams(eta, delay_rate),
            plan_for=plan_for,
            seed_node=seed_node,
            runs=runs,
            master_seed=master_seed,
        )

    def sweep_scale_or_timing(
        self,
        intervention_kind: InterventionKind,
        eps_grid,
        axis_grid,
        params: DiffusionParams,
        seed_node: int,
        runs: int,
        master_seed: int = 0,
        strategy: TargetStrategy = TargetStrategy.RANDOM,
    ) -> SweepGrid:
        """
        Use case: Prevalence over strength x scale (prebunking) or strength x stage (contextualization).

        Args:
            intervention_kind: prebunk (axis = delta) or contextualize (axis = phi).
            eps_grid: Ascending strengths.
            axis_grid: Ascending delta or phi values.
            params: Fixed diffusion parameters.
            seed_node: Diffusion seed.
            runs: Runs per cell.
            master_seed: Seed shared by every cell.
            strategy: Prebunking targeting.

        Returns:
            SweepGrid: Rows epsilon, columns delta or phi.
        """
        kind = InterventionKind(intervention_kind)
        if kind is InterventionKind.NUDGE:
            raise InvalidParameterError("Nudging has neither scale nor timing.")
        eps_values = ExperimentGridService.require_sorted("eps_grid", eps_grid)
        axis_name = "delta" if kind is InterventionKind.PREBUNK else "phi"
        axis_values = ExperimentGridService.require_sorted(f"{axis_name}_grid", axis_grid)

        def plan_for(epsilon: float, column: float) -> InterventionPlan:
            if kind is InterventionKind.PREBUNK:
                return InterventionPlan.single(kind, epsilon, delta=column, strategy=strategy)
            return InterventionPlan.single(kind, epsilon, phi=column)

        return self._grid(
            label=f"{kind.value}-eps-{axis_name}",
            axis1=("epsilon", eps_values),
            axis2=(axis_name, axis_values),
            params_for=lambda _column: params,
            plan_for=plan_for,
            seed_node=seed_node,
            runs=runs,
            master_seed=master_seed,
        )

    def _grid(self, label, axis1, axis2, params_for, plan_for, seed_node, runs, master_seed) -> SweepGrid:
        """Run every cell column by column; epsilon = 0 cells reuse the column baseline."""
        rows, cols = len(axis1[1]), len(axis2[1])
        prevalence = np.zeros((rows, cols))
        std = np.zeros((rows, cols))
        baseline = np.zeros(cols)

        for j, column in enumerate(axis2[1]):
            params = params_for(column)
            base = self._batch(params, InterventionPlan.none(), seed_node, runs, master_seed)
            baseline[j] = base.mean_prevalence
            for i, epsilon in enumerate(axis1[1]):
                if epsilon == 0.0:
                    summary = base
                else:
                    summary = self._batch(params, plan_for(epsilon, column), seed_node, runs, master_seed)
                prevalence[i, j] = summary.mean_prevalence
                std[i, j] = summary.prevalence_std
            logger.info("%s: column %s=%.4g done (baseline rho=%.5f)", label, axis2[0], column, baseline[j])

        return SweepGrid(axis1[0], axis1[1], axis2[0], axis2[1], prevalence, std, baseline, label=label)

    def targeting_differentials(
        self,
        eps_grid,
        delta_grid,
        params: DiffusionParams,
        seed_node: int,
        runs: int,
        master_seed: int = 0,
        strategies=tuple(TargetStrategy),
    ) -> list[StrategyDifferential]:
        """
        Use case: rho_Random - rho_X for every strategy over (epsilon, delta).

        Random is always evaluated as the reference. Run i of every strategy
        shares the diffusion random numbers of run i of Random.

        Returns:
            list[StrategyDifferential]: One entry per strategy, Random first.
        """
        eps_values = ExperimentGridService.require_sorted("eps_grid", eps_grid)
        delta_values = ExperimentGridService.require_sorted("delta_grid", delta_grid)
        ordered = [TargetStrategy.RANDOM] + [
            strategy for strategy in map(TargetStrategy.parse, strategies) if strategy is not TargetStrategy.RANDOM
        ]

        per_run: dict[TargetStrategy, np.ndarray] = {}
        for strategy in ordered:
            grid = np.zeros((len(eps_values), len(delta_values), runs))
            for i, epsilon in enumerate(eps_values):
                for j, delta in enumerate(delta_values):
                    plan = InterventionPlan.single(InterventionKind.PREBUNK, epsilon, delta=delta, strategy=strategy)
                    grid[i, j] = self._batch(params, plan, seed_node, runs, master_seed).run_prevalences
            per_run[strategy] = grid
            logger.info("Targeting %s: %d cells done", strategy.value, len(eps_values) * len(delta_values))

        random_runs = per_run[TargetStrategy.RANDOM]
        columns = range(len(delta_values))
        differentials = []
        for strategy in ordered:
            runs_x = per_run[strategy]
            errors = np.array(
                [
                    [ExperimentGridService.paired_standard_error(random_runs[i, j], runs_x[i, j]) for j in columns]
                    for i in range(len(eps_values))
                ]
            )
            differentials.append(
                StrategyDifferential(
                    strategy=strategy,
                    eps_values=eps_values,
                    delta_values=delta_values,
                    prevalence=runs_x.mean(axis=2),
                    random_prevalence=random_runs.mean(axis=2),
                    standard_error=errors,
                )
            )
        return differentials

    def combined_scenarios(
        self, scenarios: list[Scenario], seed_node: int, runs: int, master_seed: int = 0
    ) -> ScenarioSet:
        """
        Use case: Per-run relative prevalence of every scenario.

        Run i of a scenario is divided by run i of the no-intervention batch
        under the scenario's parameters.

        Returns:
            ScenarioSet: Outcomes in scenario order.
        """
        baselines: dict[DiffusionParams, np.ndarray] = {}
        outcomes = []
        for scenario in scenarios:
            if scenario.params not in baselines:
                baselines[scenario.params] = self._batch(
                    scenario.params, InterventionPlan.none(), seed_node, runs, master_seed
                ).run_prevalences
            base = baselines[scenario.params]
            if scenario.plan.is_empty:
                prevalences, ctx_time = base, None
            else:
                summary = self._batch(scenario.params, scenario.plan, seed_node, runs, master_seed)
                prevalences, ctx_time = summary.run_prevalences, summary.ctx_time
            outcome = ScenarioOutcome(scenario, prevalences, prevalences / base, ctx_time)
            logger.info(
                "Scenario %s: relative prevalence %.4f +/- %.4f",
                scenario.name,
                outcome.mean_relative_prevalence,
                outcome.relative_standard_error,
            )
            outcomes.append(outcome)
        return ScenarioSet(tuple(outcomes))
