"""
Domain Service generating synthetic test networks.
"""

import networkx as nx
import numpy as np

from src.graph.domain.entities import DirectedGraph
from src.shared.domain.constants import ExperimentDefaults
from src.shared.domain.exceptions import InvalidParameterError

SUSCEPTIBILITY_LAWS = ("uniform", "scored")


class SyntheticNetworkService:
    """
    Domain Service: Scale-free networks for desk-scale experiments.
    """

    @staticmethod
    def synthetic_scale_free_network(
        node_count: int,
        attachment: int,
        seed: int,
        susceptibility: "float | str | np.ndarray" = 1.0,
        shuffle_ids: bool = False,
    ) -> DirectedGraph:
        """
        Bidirected Barabasi-Albert network.

        Susceptibility laws:
        - "uniform": U(0, 1) draws.
        - "scored": a share of exactly-1 scores (users who only share low-credibility
          links), Beta draws for everyone else.

        Args:
            node_count: Number of nodes.
            attachment: Edges attached by every new node.
            seed: Seed of the generator (and of random susceptibilities and ids).
            susceptibility: A constant, per-node values, or the name of a law.
            shuffle_ids: Permute node indices so they carry no arrival order.

        Returns:
            DirectedGraph: Every undirected edge becomes two directed edges.
        """
        if not 1 <= attachment < node_count:
            raise InvalidParameterError("Barabasi-Albert needs 1 <= attachment < node_count.")
        undirected = nx.barabasi_albert_graph(node_count, attachment, seed=seed)
        edges = np.array(list(undirected.edges()), dtype=np.int64).reshape(-1, 2)

        rng = np.random.default_rng(seed)
        if isinstance(susceptibility, str):
            values = SyntheticNetworkService._draw_susceptibility(susceptibility, node_count, rng)
        else:
            values = np.broadcast_to(np.asarray(susceptibility, dtype=float), (node_count,)).copy()

        if shuffle_ids:
            labels = rng.permutation(node_count)
            edges = labels[edges]
            relabeled = np.empty_like(values)
            relabeled[labels] = values
            values = relabeled

        sources = np.concatenate([edges[:, 0], edges[:, 1]])
        targets = np.concatenate([edges[:, 1], edges[:, 0]])
        return DirectedGraph.from_edges(node_count, sources, targets, susceptibility=values)

    @staticmethod
    def _draw_susceptibility(law: str, node_count: int, rng: np.random.Generator) -> np.ndarray:
        if law == "uniform":
            return rng.random(node_count)
        if law == "scored":
            values = rng.beta(*ExperimentDefaults.SCORE_BETA_SHAPE, size=node_count)
            values[rng.random(node_count) < ExperimentDefaults.FULLY_SUSCEPTIBLE_SHARE] = 1.0
            return values
        raise InvalidParameterError(
            f"Unknown susceptibility law '{law}' (expected one of {', '.join(SUSCEPTIBILITY_LAWS)})."
        )
