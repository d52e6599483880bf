"""
Unit Tests for ExperimentService.

Test categories:
- Strength x contagiousness sweep tests
- Scale and timing sweep tests
- Targeting differential tests
- Combined scenario tests
"""

# pylint: disable=redefined-outer-name

from unittest.mock import patch

import numpy as np
import pytest

from src.diffusion.application.services import DiffusionService
from src.diffusion.domain.value_objects import DiffusionParams
from src.experiments.application.services import ExperimentService
from src.experiments.domain.value_objects import Scenario
from src.interventions.domain.value_objects import ContextualizeSpec, InterventionPlan, NudgeSpec, PrebunkSpec
from src.shared.domain.enums import InterventionKind, TargetStrategy
from src.shared.domain.exceptions import InvalidParameterError

RUNS = 8


@pytest.fixture
def diffusion(small_scale_free_graph):
    """Diffusion service over the small scale-free network."""
    return DiffusionService(small_scale_free_graph, ctx_runs=5)


@pytest.fixture
def service(diffusion):
    """Experiment service under test."""
    return ExperimentService(diffusion)


class TestStrengthSweep:
    """Test sweep_strength_vs_contagiousness."""

    def test_zero_strength_row_is_the_baseline(self, service):
        """Test that epsilon = 0 reproduces the column baseline."""
        grid = service.sweep_strength_vs_contagiousness(
            InterventionKind.NUDGE, (0.0, 0.5, 1.0), (0.2, 0.4), delay_rate=1.0, seed_node=0, runs=RUNS
        )

        assert grid.prevalence.shape == (3, 2)
        assert np.array_equal(grid.prevalence[0], grid.baseline)
        assert np.all(grid.relative_prevalence[0] == 1.0)
        assert grid.label == "nudge-eps-eta"

    def test_paired_runs_never_increase_with_strength(self, service):
        """Test monotonicity under shared random numbers."""
        grid = service.sweep_strength_vs_contagiousness(
            InterventionKind.NUDGE, (0.0, 0.3, 0.6, 1.0), (0.3,), delay_rate=1.0, seed_node=0, runs=RUNS
        )

        column = grid.prevalence[:, 0]
        assert all(later <= earlier for earlier, later in zip(column, column[1:]))

    def test_unsorted_grid(self, service):
        """Test grid validation."""
        with pytest.raises(InvalidParameterError, match="eps_grid"):
            service.sweep_strength_vs_contagiousness(
                InterventionKind.NUDGE, (0.5, 0.0), (0.2,), delay_rate=1.0, seed_node=0, runs=RUNS
            )


class TestScaleOrTimingSweep:
    """Test sweep_scale_or_timing."""

    def test_prebunk_axis_is_delta(self, service):
        """Test the axis name and label."""
        grid = service.sweep_scale_or_timing(
            InterventionKind.PREBUNK, (0.0, 1.0), (0.1, 0.5), DiffusionParams(0.3, 1.0), seed_node=0, runs=RUNS
        )

        assert grid.axis2_name == "delta"
        assert grid.label == "prebunk-eps-delta"

    def test_contextualize_axis_is_phi(self, service):
        """Test the timing axis."""
        grid = service.sweep_scale_or_timing(
            InterventionKind.CONTEXTUALIZE, (0.0, 0.5), (0.0, 0.5), DiffusionParams(0.3, 1.0), seed_node=0, runs=RUNS
        )

        assert grid.axis2_name == "phi"
        assert grid.prevalence.shape == (2, 2)

    def test_nudge_has_no_axis(self, service):
        """Test the rejected combination."""
        with pytest.raises(InvalidParameterError, match="Nudging"):
            service.sweep_scale_or_timing(
                InterventionKind.NUDGE, (0.5,), (0.5,), DiffusionParams(0.3, 1.0), seed_node=0, runs=RUNS
            )


class TestTargetingDifferentials:
    """Test targeting_differentials."""

    def test_random_first_with_zero_differential(self, service):
        """Test that Random is the reference of every strategy."""
        differentials = service.targeting_differentials(
            (0.5,),
            (0.2,),
            DiffusionParams(0.3, 1.0),
            seed_node=0,
            runs=RUNS,
            strategies=("degree", "random"),
        )

        assert [d.strategy for d in differentials] == [TargetStrategy.RANDOM, TargetStrategy.DEGREE]
        assert differentials[0].delta_rho[0, 0] == 0.0
        assert differentials[0].standard_error[0, 0] == 0.0
        assert differentials[1].random_prevalence[0, 0] == differentials[0].prevalence[0, 0]


class TestCombinedScenarios:
    """Test combined_scenarios."""

    def test_baseline_relative_prevalence_is_one(self, service):
        """Test per-run normalization by the paired baseline run."""
        params = DiffusionParams(0.3, 1.0)
        scenarios = [
            Scenario("baseline", InterventionPlan.none(), params),
            Scenario("nudge", InterventionPlan(nudge=NudgeSpec(0.5)), params),
        ]

        result = service.combined_scenarios(scenarios, seed_node=0, runs=RUNS)

        assert result.names == ["baseline", "nudge"]
        assert np.all(result["baseline"].relative_prevalences == 1.0)
        assert np.all(result["nudge"].relative_prevalences <= 1.0)
        assert len(result.runs_frame()) == 2 * RUNS

    def test_baseline_batch_runs_once_per_params(self, service, diffusion):
        """Test that scenarios sharing parameters share one baseline batch."""
        params = DiffusionParams(0.3, 1.0)
        scenarios = [
            Scenario("a", InterventionPlan(nudge=NudgeSpec(0.2)), params),
            Scenario("b", InterventionPlan(nudge=NudgeSpec(0.4)), params),
        ]

        with patch.object(diffusion, "monte_carlo", wraps=diffusion.monte_carlo) as monte_carlo:
            service.combined_scenarios(scenarios, seed_node=0, runs=RUNS)

        assert monte_carlo.call_count == 3

    def test_unknown_scenario_name(self, service):
        """Test lookup by name."""
        result = service.combined_scenarios(
            [Scenario("baseline", InterventionPlan.none(), DiffusionParams(0.3, 1.0))], seed_node=0, runs=2
        )

        with pytest.raises(KeyError):
            _ = result["missing"]

    def test_combined_runs_are_dominated_by_each_single_intervention(self, service, diffusion):
        """Test that stacking interventions never lets a paired run reach more users."""
        params = DiffusionParams(0.6, 1.0)
        singles = {
            "nudge": InterventionPlan(nudge=NudgeSpec(0.4)),
            "prebunk": InterventionPlan(prebunk=PrebunkSpec(0.7, 0.3, strategy=TargetStrategy.DEGREE)),
            "contextualize": InterventionPlan(contextualize=ContextualizeSpec(0.5, phi=0.3)),
        }
        combined = InterventionPlan.none()
        for plan in singles.values():
            combined = combined.combined_with(plan)
        scenarios = [Scenario(name, plan, params) for name, plan in singles.items()]
        scenarios.append(Scenario("combined", combined, params))

        result = service.combined_scenarios(scenarios, seed_node=0, runs=RUNS, master_seed=4)
        combined_sets = diffusion.monte_carlo(params, combined, 0, RUNS, 4, keep_active_sets=True).run_active_sets

        for name, plan in singles.items():
            assert np.all(result["combined"].run_prevalences <= result[name].run_prevalences)
            single_sets = diffusion.monte_carlo(params, plan, 0, RUNS, 4, keep_active_sets=True).run_active_sets
            for stacked, alone in zip(combined_sets, single_sets):
                assert set(stacked.tolist()) <= set(alone.tolist())
