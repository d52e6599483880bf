"""
Domain Service for assigning susceptibilities from an empirical distribution.
"""

import numpy as np

from src.shared.domain.exceptions import InvalidParameterError
from src.shared.domain.validation import require_unit_interval
from src.graph.domain.entities import DirectedGraph


class SusceptibilityAssignmentService:
    """
    Domain Service: Bootstrap resampling of susceptibility values.

    Each node draws independently and uniformly, with replacement, from the
    empirical values. The draw is deterministic given the seed.
    """

    @staticmethod
    def assign_from_distribution(graph: DirectedGraph, empirical_values, rng_seed: int) -> DirectedGraph:
        """
        Assign bootstrapped susceptibilities to every node.

        Args:
            graph: Graph to annotate.
            empirical_values: Observed susceptibilities in [0, 1].
            rng_seed: Seed of the resampling stream.

        Returns:
            DirectedGraph: Copy with the drawn susceptibilities.

        Raises:
            InvalidParameterError: If the value list is empty or holds values outside [0, 1].
        """
        values = np.asarray(list(empirical_values), dtype=float)
        if values.size == 0:
            raise InvalidParameterError("Cannot assign susceptibility from an empty value list.")
        for value in np.unique(values):
            require_unit_interval("empirical susceptibility", value)

        rng = np.random.default_rng(rng_seed)
        return graph.with_susceptibility(rng.choice(values, size=graph.node_count, replace=True))
