"""
Domain Service - Diffusion seed selection.
"""

import numpy as np

from src.graph.domain.entities import DirectedGraph
from src.graph.domain.services import GraphStructureService
from src.shared.domain.constants import SimulationDefaults
from src.shared.domain.exceptions import InvalidParameterError, NoFullySusceptibleNodeError


class SeedSelectionService:
    """
    Domain Service: Picks the most connected fully susceptible node.

    Business Rules:
    - Candidates have s_v = 1
    - Largest out-degree wins; ties break by ascending id
    - With `relax`, the candidates are the nodes of maximal susceptibility instead
    """

    @staticmethod
    def select_seed(graph: DirectedGraph, relax: bool = False) -> int:
        """
        Select the diffusion seed.

        Args:
            graph: Network with susceptibilities.
            relax: Fall back to the most susceptible nodes when none has s_v = 1.

        Returns:
            int: Internal id of the seed.

        Raises:
            NoFullySusceptibleNodeError: If no node has s_v = 1 and `relax` is off.
        """
        if graph.node_count == 0:
            raise InvalidParameterError("Cannot select a seed in an empty graph.")

        candidates = graph.susceptibility == SimulationDefaults.SEED_SUSCEPTIBILITY
        if not candidates.any():
            highest = float(np.max(graph.susceptibility))
            if not relax:
                raise NoFullySusceptibleNodeError(highest)
            candidates = graph.susceptibility == highest
        return GraphStructureService.max_out_degree_node(graph, candidates)
