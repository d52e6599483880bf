"""
Unit Tests for SimulationOutputRepository.

Test categories:
- Single run output tests
- Monte Carlo output tests
"""

import json

import numpy as np
import pandas as pd

from src.diffusion.domain.value_objects import DiffusionParams, MonteCarloSummary, SimulationResult
from src.diffusion.infrastructure.repositories import SimulationOutputRepository
from src.graph.domain.entities import DirectedGraph
from src.graph.domain.value_objects import NodeIdMap
from src.interventions.domain.value_objects import InterventionPlan, NudgeSpec
from src.shared.infrastructure.repositories import OutputWriter


def named_graph():
    """Path a -> b -> c."""
    return DirectedGraph.from_edges(3, [0, 1], [1, 2], susceptibility=[1.0, 1.0, 1.0], id_map=NodeIdMap(("a", "b", "c")))


class TestSaveSingle:
    """Test save_single."""

    def test_writes_three_files_with_external_ids(self, tmp_path):
        """Test activations, curve and summary."""
        result = SimulationResult(np.array([0.0, 1.5, np.nan]), seed_node=0)
        plan = InterventionPlan(nudge=NudgeSpec(0.1))

        paths = SimulationOutputRepository(OutputWriter(tmp_path)).save_single(
            named_graph(), DiffusionParams(0.5, 0.25), plan, result, rng_seed=3
        )

        assert [path.name for path in paths] == ["activations.csv", "curve.csv", "summary.json"]
        activations = pd.read_csv(tmp_path / "activations.csv")
        assert activations["node_id"].tolist() == ["a", "b"]
        summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
        assert summary["seed_node"] == "a"
        assert summary["plan"] == {"nudge": {"epsilon": 0.1}}
        assert summary["mean_prevalence"] == 2 / 3
        assert summary["ctx_time"] is None


class TestSaveMonteCarlo:
    """Test save_monte_carlo."""

    def test_writes_curve_and_summary(self, tmp_path):
        """Test the batch outputs."""
        summary = MonteCarloSummary(3, np.array([0.0, 1.0]), np.array([1 / 3, 0.5]), np.array([1 / 3, 2 / 3]))

        paths = SimulationOutputRepository(OutputWriter(tmp_path)).save_monte_carlo(
            named_graph(), DiffusionParams(0.5, 0.25), InterventionPlan.none(), 0, summary, master_seed=11
        )

        assert [path.name for path in paths] == ["curve.csv", "summary.json"]
        payload = json.loads(paths[1].read_text(encoding="utf-8"))
        assert payload["runs"] == 2
        assert payload["master_seed"] == 11
        assert payload["params"] == {"eta": 0.5, "lambda": 0.25}
        assert pd.read_csv(paths[0]).columns.tolist() == ["time", "active_fraction"]
