"""
Acceptance Tests for the diffusion engine.

Test categories:
- Exact path probabilities
- Multiplicative stacking of interventions
- Per-run dominance under common random numbers
"""

import numpy as np
import pytest

from src.diffusion.application.services import DiffusionService
from src.diffusion.domain.services import CTICSimulator, MonteCarloRunner
from src.diffusion.domain.value_objects import DiffusionParams
from src.graph.domain.entities import DirectedGraph
from src.interventions.domain.value_objects import InterventionPlan, NudgeSpec, PrebunkSpec
from src.shared.domain.enums import InterventionKind, TargetStrategy

pytestmark = pytest.mark.acceptance


class TestPathProbabilities:
    """Monte Carlo against the exact activation probabilities of a path."""

    def test_path_activation_frequencies(self):
        """Test P(b) = 0.25 and P(c) = 0.0625 within three binomial standard errors."""
        graph = DirectedGraph.from_edges(3, [0, 1], [1, 2], susceptibility=[1.0, 0.5, 0.5])
        runner = MonteCarloRunner(CTICSimulator(graph, DiffusionParams(0.5, 0.25)))
        runs = 100_000

        summary = runner.run(InterventionPlan.none(), 0, runs, master_seed=2024, keep_active_sets=True)

        hits = np.zeros(3)
        for active in summary.run_active_sets:
            hits[active] += 1
        for node, exact in ((1, 0.25), (2, 0.0625)):
            error = np.sqrt(exact * (1 - exact) / runs)
            assert abs(hits[node] / runs - exact) <= 3 * error


class TestStacking:
    """Nudge plus all-node prebunking equals one combined nudge."""

    @pytest.mark.parametrize(("first", "second"), [(0.5, 0.25), (0.25, 0.75), (0.125, 0.5)])
    def test_bit_identical_activation_times(self, small_scale_free_graph, first, second):
        """Test identical output for strengths that are exact in binary."""
        simulator = CTICSimulator(small_scale_free_graph, DiffusionParams(0.6, 0.5))
        stacked = InterventionPlan(
            nudge=NudgeSpec(first), prebunk=PrebunkSpec(second, 1.0, TargetStrategy.DEGREE)
        )
        single = InterventionPlan(nudge=NudgeSpec(1 - (1 - first) * (1 - second)))

        for rng_seed in range(5):
            a = simulator.simulate(stacked, 0, rng_seed=rng_seed)
            b = simulator.simulate(single, 0, rng_seed=rng_seed)
            assert np.array_equal(a.activation_time, b.activation_time, equal_nan=True)


class TestCommonRandomNumbers:
    """Stronger interventions shrink every paired run."""

    def test_active_sets_nest_across_strengths(self, desk_network):
        """Test per-run set inclusion along a 21-point nudge grid."""
        service = DiffusionService(desk_network)
        params = DiffusionParams(0.3, 0.25)
        seed_node = service.select_seed()
        runs = 200

        previous = None
        for epsilon in np.linspace(0.0, 1.0, 21):
            plan = InterventionPlan.single(InterventionKind.NUDGE, float(epsilon))
            summary = service.monte_carlo(params, plan, seed_node, runs, master_seed=5, keep_active_sets=True)
            current = [set(active.tolist()) for active in summary.run_active_sets]
            if previous is not None:
                assert all(now <= before for now, before in zip(current, previous, strict=True))
            previous = current
