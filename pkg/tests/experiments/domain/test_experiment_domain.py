"""
Unit Tests for the experiments domain.

Test categories:
- Grid helper tests
- Scenario catalogue tests
- Synthetic network tests
- Result value object tests
"""

import numpy as np
import pytest

from src.diffusion.domain.value_objects import DiffusionParams
from src.experiments.domain.services import (
    BASELINE_SCENARIO,
    ExperimentGridService,
    ScenarioFactory,
    SyntheticNetworkService,
)
from src.experiments.domain.value_objects import Scenario, StrategyDifferential, SweepGrid
from src.shared.domain.constants import ExperimentDefaults, PaperEstimates
from src.shared.domain.enums import TargetStrategy
from src.shared.domain.exceptions import InvalidParameterError


class TestExperimentGridService:
    """Test grids and paired errors."""

    def test_unit_grid(self):
        """Test inclusive endpoints."""
        assert ExperimentGridService.unit_grid(5) == (0.0, 0.25, 0.5, 0.75, 1.0)

    def test_eta_grid_is_log_spaced(self):
        """Test constant ratios between neighbours."""
        grid = np.array(ExperimentGridService.eta_grid(3, 0.01, 0.1))

        assert grid == pytest.approx([0.01, 0.1 ** 1.5, 0.1])

    @pytest.mark.parametrize("values", [(), (0.2, 0.1)])
    def test_require_sorted_rejects(self, values):
        """Test empty and descending grids."""
        with pytest.raises(InvalidParameterError, match="ascending"):
            ExperimentGridService.require_sorted("eps_grid", values)

    def test_paired_standard_error(self):
        """Test the error of the per-run differences."""
        first = np.array([1.0, 2.0, 3.0])
        second = np.array([0.0, 2.0, 1.0])

        expected = np.std([1.0, 0.0, 2.0], ddof=1) / np.sqrt(3)
        assert ExperimentGridService.paired_standard_error(first, second) == pytest.approx(expected)
        assert ExperimentGridService.paired_standard_error([1.0], [0.0]) == 0.0


class TestScenarioFactory:
    """Test the default scenario catalogue."""

    def test_baseline_and_sixteen_scenarios(self):
        """Test names and order."""
        names = [scenario.name for scenario in ScenarioFactory.default_scenarios()]

        assert names[0] == BASELINE_SCENARIO
        assert len(names) == 17
        assert names[1:5] == ["i:nudge", "i:prebunk", "i:contextualize", "i:combined"]
        assert names[-1] == "iv:combined"

    def test_setting_two_raises_strengths(self):
        """Test the strength increment."""
        scenarios = {scenario.name: scenario for scenario in ScenarioFactory.default_scenarios()}

        assert scenarios["ii:nudge"].plan.nudge.epsilon == pytest.approx(PaperEstimates.EPSILON_NUDGE + 0.1)
        assert scenarios["ii:prebunk"].plan.prebunk.delta == PaperEstimates.DELTA_PREBUNK

    def test_setting_three_widens_reach_and_advances_timing(self):
        """Test the reach increment."""
        scenarios = {scenario.name: scenario for scenario in ScenarioFactory.default_scenarios()}
        combined = scenarios["iii:combined"].plan

        assert combined.prebunk.delta == pytest.approx(PaperEstimates.DELTA_PREBUNK + 0.1)
        assert combined.contextualize.phi == pytest.approx(PaperEstimates.PHI_CONTEXT - 0.1)
        assert combined.nudge.epsilon == PaperEstimates.EPSILON_NUDGE

    def test_custom_params_are_shared(self):
        """Test that every scenario uses the given parameters."""
        params = DiffusionParams(0.1, 1.0)

        assert {scenario.params for scenario in ScenarioFactory.default_scenarios(params)} == {params}

    def test_scenario_from_dict(self):
        """Test default parameters and an explicit plan."""
        default = DiffusionParams(0.1, 1.0)

        scenario = Scenario.from_dict({"name": "n", "plan": {"nudge": {"epsilon": 0.3}}}, default)

        assert scenario.params is default
        assert scenario.plan.nudge.epsilon == 0.3


class TestSyntheticNetworkService:
    """Test the Barabasi-Albert generator."""

    def test_bidirected_edges(self):
        """Test that every undirected edge appears in both directions."""
        graph = SyntheticNetworkService.synthetic_scale_free_network(50, 2, seed=4)

        assert graph.node_count == 50
        assert graph.edge_count == 2 * 2 * (50 - 2)
        assert np.all(graph.susceptibility == 1.0)

    def test_uniform_susceptibility_is_reproducible(self):
        """Test seeded U(0, 1) draws."""
        first = SyntheticNetworkService.synthetic_scale_free_network(30, 2, seed=9, susceptibility="uniform")
        second = SyntheticNetworkService.synthetic_scale_free_network(30, 2, seed=9, susceptibility="uniform")

        assert np.array_equal(first.susceptibility, second.susceptibility)
        assert np.all((first.susceptibility >= 0) & (first.susceptibility < 1))

    def test_scored_law_has_a_point_mass_at_one(self):
        """Test the share of fully susceptible nodes and the Beta remainder."""
        graph = SyntheticNetworkService.synthetic_scale_free_network(2000, 2, seed=3, susceptibility="scored")
        ones = graph.susceptibility == 1.0

        assert abs(ones.mean() - ExperimentDefaults.FULLY_SUSCEPTIBLE_SHARE) < 0.05
        assert np.all((graph.susceptibility[~ones] >= 0) & (graph.susceptibility[~ones] < 1))

    def test_shuffled_ids_keep_the_structure(self):
        """Test that shuffling permutes labels without changing the degree sequence."""
        plain = SyntheticNetworkService.synthetic_scale_free_network(300, 3, seed=5, susceptibility="scored")
        shuffled = SyntheticNetworkService.synthetic_scale_free_network(
            300, 3, seed=5, susceptibility="scored", shuffle_ids=True
        )

        assert shuffled.edge_count == plain.edge_count
        assert sorted(shuffled.out_degrees().tolist()) == sorted(plain.out_degrees().tolist())
        assert not np.array_equal(shuffled.out_degrees(), plain.out_degrees())

    def test_shuffled_ids_carry_susceptibility_along(self):
        """Test that every node keeps its own score after relabeling."""
        values = np.linspace(0.0, 1.0, 40)
        graph = SyntheticNetworkService.synthetic_scale_free_network(40, 2, seed=8, susceptibility=values, shuffle_ids=True)
        plain = SyntheticNetworkService.synthetic_scale_free_network(40, 2, seed=8, susceptibility=values)

        by_degree = sorted(zip(plain.out_degrees().tolist(), plain.susceptibility.tolist()))
        assert sorted(zip(graph.out_degrees().tolist(), graph.susceptibility.tolist())) == by_degree

    @pytest.mark.parametrize(("kwargs", "message"), [({"attachment": 30}, "attachment"), ({"susceptibility": "beta"}, "beta")])
    def test_invalid_arguments(self, kwargs, message):
        """Test the argument checks."""
        arguments = {"node_count": 30, "attachment": 2, "seed": 1, **kwargs}

        with pytest.raises(InvalidParameterError, match=message):
            SyntheticNetworkService.synthetic_scale_free_network(**arguments)


class TestResultValueObjects:
    """Test SweepGrid and StrategyDifferential."""

    def test_sweep_relative_prevalence_and_frame(self):
        """Test division by the column baseline and the long layout."""
        grid = SweepGrid(
            "epsilon",
            (0.0, 1.0),
            "eta",
            (0.1, 0.2),
            prevalence=np.array([[0.2, 0.4], [0.1, 0.1]]),
            std=np.zeros((2, 2)),
            baseline=np.array([0.2, 0.4]),
        )

        assert grid.relative_prevalence.tolist() == [[1.0, 1.0], [0.5, 0.25]]
        frame = grid.to_frame()
        assert frame.columns.tolist() == ["epsilon", "eta", "prevalence", "relative_prevalence", "std"]
        assert frame.iloc[1][["epsilon", "eta"]].tolist() == [0.0, 0.2]

    def test_sweep_shape_mismatch(self):
        """Test the matrix shape check."""
        with pytest.raises(InvalidParameterError):
            SweepGrid("epsilon", (0.0,), "eta", (0.1, 0.2), np.zeros((2, 2)), np.zeros((2, 2)), np.zeros(2))

    def test_differential(self):
        """Test rho_Random - rho_X."""
        differential = StrategyDifferential(
            TargetStrategy.DEGREE,
            (0.5,),
            (0.2,),
            prevalence=np.array([[0.1]]),
            random_prevalence=np.array([[0.3]]),
            standard_error=np.array([[0.01]]),
        )

        assert differential.delta_rho[0, 0] == pytest.approx(0.2)
        assert differential.to_frame()["strategy"].tolist() == ["degree"]
