"""
Unit Tests for TargetSelectionService.

Test categories:
- Target count tests
- Strategy ranking tests
- Seed exclusion tests
- Property tests
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from src.graph.domain.entities import DirectedGraph
from src.interventions.domain.services import TargetSelectionService, target_count
from src.shared.domain.enums import TargetStrategy
from src.shared.domain.exceptions import InvalidParameterError


class TestTargetCount:
    """Test rounding of delta * N."""

    @pytest.mark.parametrize(
        ("delta", "nodes", "expected"),
        [(0.0, 10, 0), (0.25, 10, 3), (0.24, 10, 2), (0.5, 5, 3), (1.0, 7, 7), (0.2, 2000, 400)],
    )
    def test_round_half_up(self, delta, nodes, expected):
        """Test round(delta * N) with halves rounded up."""
        assert target_count(delta, nodes) == expected


class TestRankings:
    """Test the four strategies."""

    def test_degree_ranking_ties_by_id(self):
        """Test out-degree order."""
        graph = DirectedGraph.from_edges(4, [1, 1, 3, 3, 2], [0, 2, 0, 1, 0])

        order = TargetSelectionService.ranking(graph, TargetStrategy.DEGREE)

        assert order.tolist() == [1, 3, 2, 0]

    def test_susceptibility_ranking(self, star_graph):
        """Test susceptibility order with the seed excluded."""
        order = TargetSelectionService.ranking(star_graph, TargetStrategy.SUSCEPTIBILITY, seed_node=0)

        assert order.tolist() == [2, 4, 3, 1]

    def test_distance_ranking_puts_unreachable_last(self):
        """Test hop-count order from the seed."""
        graph = DirectedGraph.from_edges(5, [0, 1, 0], [1, 2, 3])

        order = TargetSelectionService.ranking(graph, TargetStrategy.DISTANCE, seed_node=0)

        assert order.tolist() == [1, 3, 2, 4]

    def test_distance_needs_seed(self, path_graph):
        """Test the missing seed."""
        with pytest.raises(InvalidParameterError, match="seed"):
            TargetSelectionService.ranking(path_graph, TargetStrategy.DISTANCE)

    def test_random_ranking_is_seeded_permutation(self, small_scale_free_graph):
        """Test determinism and completeness."""
        first = TargetSelectionService.ranking(small_scale_free_graph, "random", rng_seed=4)
        second = TargetSelectionService.ranking(small_scale_free_graph, "random", rng_seed=4)

        assert first.tolist() == second.tolist()
        assert sorted(first.tolist()) == list(range(200))

    def test_seed_can_stay_eligible(self, star_graph):
        """Test exclude_seed=False."""
        order = TargetSelectionService.ranking(star_graph, TargetStrategy.DEGREE, seed_node=0, exclude_seed=False)

        assert order[0] == 0


class TestResolveTargets:
    """Test resolve_targets."""

    def test_zero_delta_gives_no_targets(self, star_graph):
        """Test the empty target set."""
        assert len(TargetSelectionService.resolve_targets(star_graph, 0.0, TargetStrategy.DEGREE, 0)) == 0

    def test_full_delta_targets_everyone_but_seed(self, star_graph):
        """Test that the count is capped by the eligible nodes."""
        targets = TargetSelectionService.resolve_targets(star_graph, 1.0, TargetStrategy.RANDOM, seed_node=0)

        assert sorted(targets.tolist()) == [1, 2, 3, 4]

    def test_invalid_delta(self, star_graph):
        """Test the range check."""
        with pytest.raises(InvalidParameterError):
            TargetSelectionService.resolve_targets(star_graph, 1.2, TargetStrategy.DEGREE, 0)

    @settings(max_examples=50, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
    @given(
        small=st.floats(min_value=0.0, max_value=1.0),
        large=st.floats(min_value=0.0, max_value=1.0),
        strategy=st.sampled_from(list(TargetStrategy)),
        rng_seed=st.integers(min_value=0, max_value=2**31),
    )
    def test_larger_scale_extends_smaller_scale(self, small_scale_free_graph, small, large, strategy, rng_seed):
        """Test that target sets are nested prefixes of one ranking."""
        small, large = sorted((small, large))

        fewer = TargetSelectionService.resolve_targets(small_scale_free_graph, small, strategy, 0, rng_seed)
        more = TargetSelectionService.resolve_targets(small_scale_free_graph, large, strategy, 0, rng_seed)

        assert np.array_equal(more[: len(fewer)], fewer)
        assert 0 not in more
