"""
Domain Service - Critical intervention strengths under the mean-field condition.

The process is critical where Lambda_max(eta * A * diag(s')) = 1, s' being
the post-intervention susceptibility.
"""

import numpy as np

from src.graph.domain.entities import DirectedGraph
from src.interventions.domain.services import TargetSelectionService
from src.shared.domain.constants import SpectralDefaults
from src.shared.domain.enums import InterventionKind, TargetStrategy
from src.shared.domain.validation import require_positive, require_unit_interval
from src.qmf.domain.services.spectral_radius_service import SpectralRadiusService
from src.qmf.domain.value_objects import CriticalCurve, CurveSpec


def critical_epsilon_from_radius(radius: float) -> float | None:
    """
    Closed-form nudging threshold 1 - 1/r for r = eta * Lambda_0.

    Uniform rescaling scales the radius linearly; r < 1 is subcritical already.
    """
    if radius < 1.0:
        return None
    return 1.0 - 1.0 / radius


class CriticalConditionService:
    """
    Domain Service: Critical strengths for nudging and prebunking.
    """

    @staticmethod
    def base_radius(graph: DirectedGraph, tol: float = SpectralDefaults.TOLERANCE) -> float:
        """Lambda_0 = Lambda_max(A diag(s))."""
        return SpectralRadiusService.spectral_radius(graph, 1.0, tol=tol).spectral_radius

    @staticmethod
    def nudge_critical_epsilon(graph: DirectedGraph, eta: float, base_radius: float | None = None) -> float | None:
        """
        Critical nudging strength.

        Args:
            graph: Network.
            eta: Contagiousness.
            base_radius: Precomputed Lambda_0 (computed when omitted).

        Returns:
            float | None: 1 - 1/(eta * Lambda_0), None when already subcritical.
        """
        eta = require_unit_interval("eta", eta)
        if base_radius is None:
            base_radius = CriticalConditionService.base_radius(graph)
        return critical_epsilon_from_radius(eta * base_radius)

    @staticmethod
    def prebunk_critical_epsilon(
        graph: DirectedGraph,
        eta: float,
        delta: float,
        strategy: TargetStrategy = TargetStrategy.RANDOM,
        seed_node: int | None = None,
        rng_seed: int = 0,
        bisect_tol: float = SpectralDefaults.BISECTION_TOLERANCE,
    ) -> float | None:
        """
        Critical prebunking strength by bisection.

        Targets are resolved with the seed kept eligible, so delta = 1 covers
        every node and matches the nudging threshold.

        Args:
            graph: Network.
            eta: Contagiousness.
            delta: Targeted fraction.
            strategy: Targeting strategy.
            seed_node: Anchor of DISTANCE targeting.
            rng_seed: Seed of RANDOM targeting.
            bisect_tol: Width of the final epsilon bracket.

        Returns:
            float | None: Midpoint of the final bracket; None when even epsilon = 1 leaves the
            process supercritical or epsilon = 0 is already subcritical.
        """
        eta = require_unit_interval("eta", eta)
        bisect_tol = require_positive("bisect_tol", bisect_tol)
        targets = TargetSelectionService.resolve_targets(
            graph, delta, strategy, seed_node=seed_node, rng_seed=rng_seed, exclude_seed=False
        )
        is_target = np.zeros(graph.node_count, dtype=bool)
        is_target[targets] = True

        def excess(epsilon: float) -> float:
            susceptibility = np.where(is_target, (1.0 - epsilon) * graph.susceptibility, graph.susceptibility)
            return SpectralRadiusService.spectral_radius(graph, eta, susceptibility).spectral_radius - 1.0

        start = excess(0.0)
        if start < 0.0:
            return None
        if start == 0.0:
            return 0.0
        if excess(1.0) > 0.0:
            return None

        low, high = 0.0, 1.0
        while high - low > bisect_tol:
            middle = 0.5 * (low + high)
            if excess(middle) > 0.0:
                low = middle
            else:
                high = middle
        return 0.5 * (low + high)

    @staticmethod
    def critical_curve(graph: DirectedGraph, spec: CurveSpec) -> CriticalCurve:
        """
        Critical strength at every grid point.

        Args:
            graph: Network.
            spec: Intervention, varied axis, grid and fixed values.

        Returns:
            CriticalCurve: One entry per grid value.
        """
        if spec.intervention is InterventionKind.NUDGE:
            base = CriticalConditionService.base_radius(graph)
            values = tuple(CriticalConditionService.nudge_critical_epsilon(graph, eta, base) for eta in spec.values)
            return CriticalCurve("eta", spec.values, values, label="nudge")

        def point(eta: float, delta: float) -> float | None:
            return CriticalConditionService.prebunk_critical_epsilon(
                graph, eta, delta, spec.strategy, spec.seed_node, spec.rng_seed, spec.bisect_tol
            )

        if spec.vary == "delta":
            values = tuple(point(spec.eta, delta) for delta in spec.values)
        else:
            values = tuple(point(eta, spec.delta) for eta in spec.values)
        return CriticalCurve(spec.vary, spec.values, values, label=f"prebunk-{spec.strategy.value}")

    @staticmethod
    def strategy_curves(
        graph: DirectedGraph,
        eta: float,
        delta_grid,
        strategies=tuple(TargetStrategy),
        seed_node: int | None = None,
        rng_seed: int = 0,
        bisect_tol: float = SpectralDefaults.BISECTION_TOLERANCE,
    ) -> list[CriticalCurve]:
        """Prebunking delta curves for several targeting strategies."""
        return [
            CriticalConditionService.critical_curve(
                graph,
                CurveSpec(
                    InterventionKind.PREBUNK,
                    "delta",
                    tuple(delta_grid),
                    eta=eta,
                    strategy=strategy,
                    seed_node=seed_node,
                    rng_seed=rng_seed,
                    bisect_tol=bisect_tol,
                ),
            )
            for strategy in strategies
        ]
