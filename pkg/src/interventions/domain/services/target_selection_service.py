"""
Domain Service for resolving prebunking target sets.
"""

import math

import numpy as np

from src.graph.domain.entities import DirectedGraph
from src.graph.domain.services import UNREACHABLE, GraphStructureService
from src.shared.domain.enums import TargetStrategy
from src.shared.domain.exceptions import InvalidParameterError
from src.shared.domain.validation import require_unit_interval


def target_count(delta: float, node_count: int) -> int:
    """Number of targets for scale delta: round(delta * N), halves rounded up."""
    return int(math.floor(delta * node_count + 0.5))


class TargetSelectionService:
    """
    Domain Service: Ranks nodes under a targeting strategy and takes a prefix.

    Business Rules:
    - Exactly round(delta * N) targets, capped by the number of eligible nodes
    - The diffusion seed is never a target during simulation
    - Ranking ties break by ascending internal id
    - Random order is a seeded permutation, so larger delta extends smaller delta
    """

    @staticmethod
    def ranking(
        graph: DirectedGraph,
        strategy: TargetStrategy,
        seed_node: int | None = None,
        rng_seed: int | np.random.SeedSequence = 0,
        exclude_seed: bool = True,
    ) -> np.ndarray:
        """
        Full priority order of the eligible nodes.

        Args:
            graph: Network.
            strategy: Targeting strategy.
            seed_node: Diffusion seed (required for DISTANCE).
            rng_seed: Seed of the RANDOM permutation.
            exclude_seed: Drop the seed from the ranking (it only anchors DISTANCE otherwise).

        Returns:
            np.ndarray: Internal ids, highest priority first.

        Raises:
            InvalidParameterError: If DISTANCE is requested without a seed node.
        """
        strategy = TargetStrategy.parse(strategy)
        ids = np.arange(graph.node_count, dtype=np.int64)
        if seed_node is not None:
            seed_node = graph.check_node(seed_node)

        if strategy is TargetStrategy.RANDOM:
            order = np.random.default_rng(rng_seed).permutation(ids)
        elif strategy is TargetStrategy.DEGREE:
            order = np.lexsort((ids, -graph.out_degrees()))
        elif strategy is TargetStrategy.SUSCEPTIBILITY:
            order = np.lexsort((ids, -graph.susceptibility))
        else:
            if seed_node is None:
                raise InvalidParameterError("Distance targeting needs the diffusion seed node.")
            distances = GraphStructureService.bfs_distance_from(graph, seed_node)
            distances = np.where(distances == UNREACHABLE, np.iinfo(np.int64).max, distances)
            order = np.lexsort((ids, distances))

        if seed_node is not None and exclude_seed:
            order = order[order != seed_node]
        return order.astype(np.int64)

    @staticmethod
    def resolve_targets(
        graph: DirectedGraph,
        delta: float,
        strategy: TargetStrategy,
        seed_node: int | None = None,
        rng_seed: int | np.random.SeedSequence = 0,
        exclude_seed: bool = True,
    ) -> np.ndarray:
        """
        Resolve the prebunking target set.

        Args:
            graph: Network.
            delta: Fraction of nodes to target, in [0, 1].
            strategy: Targeting strategy.
            seed_node: Diffusion seed.
            rng_seed: Seed of the RANDOM draw.
            exclude_seed: Never target the seed (the diffusion source is already active).

        Returns:
            np.ndarray: Target ids in priority order.
        """
        delta = require_unit_interval("delta", delta)
        count = target_count(delta, graph.node_count)
        if count == 0:
            return np.zeros(0, dtype=np.int64)
        return TargetSelectionService.ranking(graph, strategy, seed_node, rng_seed, exclude_seed)[:count]
