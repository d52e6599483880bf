"""
Domain Service for structural queries on directed graphs.

Component extraction, hop distances and degrees used by the diffusion,
targeting and spectral modules.
"""

import numpy as np
from scipy.sparse import csgraph

from src.graph.domain.entities import DirectedGraph

UNREACHABLE = -1


class GraphStructureService:
    """
    Domain Service: Structural queries that need the whole graph.

    Business Rules:
    - Components are weak (edge directions ignored)
    - Ties between equally large components go to the one holding the smallest node id
    - Distances count directed hops; unreachable nodes are marked with UNREACHABLE
    """

    @staticmethod
    def largest_weakly_connected_component(graph: DirectedGraph) -> DirectedGraph:
        """
        Restrict the graph to its largest weakly connected component.

        Nodes keep their relative order, so applying the extraction twice
        yields an identical graph.

        Args:
            graph: Graph to restrict.

        Returns:
            DirectedGraph: Reindexed component (the input itself when already connected).
        """
        if graph.node_count == 0:
            return graph

        _, labels = csgraph.connected_components(graph.to_csr_matrix(), directed=True, connection="weak")
        sizes = np.bincount(labels)
        if len(sizes) == 1:
            return graph

        kept = np.flatnonzero(labels == int(np.argmax(sizes)))
        return GraphStructureService.induced_subgraph(graph, kept)

    @staticmethod
    def induced_subgraph(graph: DirectedGraph, kept: np.ndarray) -> DirectedGraph:
        """
        Subgraph induced by the kept nodes, reindexed in ascending order.

        Args:
            graph: Source graph.
            kept: Ascending internal ids to keep.

        Returns:
            DirectedGraph: Induced subgraph with restricted id map and susceptibilities.
        """
        kept = np.asarray(kept, dtype=np.int64)
        new_index = np.full(graph.node_count, -1, dtype=np.int64)
        new_index[kept] = np.arange(len(kept))

        sources = new_index[graph.edge_sources()]
        targets = new_index[graph.out_indices]
        inside = (sources >= 0) & (targets >= 0)

        return DirectedGraph.from_edges(
            len(kept),
            sources[inside],
            targets[inside],
            susceptibility=graph.susceptibility[kept],
            id_map=graph.id_map.subset(kept),
        )

    @staticmethod
    def bfs_distance_from(graph: DirectedGraph, source: int) -> np.ndarray:
        """
        Directed hop counts from a source node.

        Args:
            graph: Graph to traverse.
            source: Internal id of the source.

        Returns:
            np.ndarray: int64 distances; UNREACHABLE for nodes not reachable.
        """
        source = graph.check_node(source)
        distances = csgraph.shortest_path(graph.to_csr_matrix(), directed=True, unweighted=True, indices=source)
        result = np.full(graph.node_count, UNREACHABLE, dtype=np.int64)
        reachable = np.isfinite(distances)
        result[reachable] = distances[reachable].astype(np.int64)
        return result

    @staticmethod
    def out_degrees(graph: DirectedGraph) -> np.ndarray:
        """
        Out-degree per node.

        Args:
            graph: Graph to query.

        Returns:
            np.ndarray: int64 out-degrees.
        """
        return graph.out_degrees()

    @staticmethod
    def max_out_degree_node(graph: DirectedGraph, candidates: np.ndarray | None = None) -> int:
        """
        Node with the largest out-degree, ties broken by ascending id.

        Args:
            graph: Graph to query.
            candidates: Optional boolean mask restricting the choice.

        Returns:
            int: Internal id.
        """
        degrees = graph.out_degrees().astype(np.int64)
        if candidates is not None:
            degrees = np.where(candidates, degrees, -1)
        return int(np.argmax(degrees))
