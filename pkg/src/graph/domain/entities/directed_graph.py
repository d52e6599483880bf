"""
Graph Domain Entity - Directed Graph.
"""

from dataclasses import dataclass, field, replace

import numpy as np
from scipy import sparse

from src.shared.domain.exceptions import InvalidParameterError
from src.graph.domain.value_objects import NodeIdMap


@dataclass(frozen=True, eq=False)
class DirectedGraph:
    """
    Entity: Immutable directed network with per-node susceptibility.

    Out-adjacency is stored in compressed sparse row form (`out_indptr`,
    `out_indices`, targets ascending per row). The reverse adjacency is
    derived on construction as the exact transpose.

    Invariants:
    - every edge endpoint is a valid node id in [0, node_count)
    - no self-loops and no parallel edges
    - susceptibility[v] in [0, 1] for all v
    """

    out_indptr: np.ndarray
    out_indices: np.ndarray
    susceptibility: np.ndarray
    id_map: NodeIdMap
    in_indptr: np.ndarray = field(init=False, repr=False)
    in_indices: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        """
        Validate invariants and derive the reverse adjacency.
        """
        indptr = np.ascontiguousarray(self.out_indptr, dtype=np.int64)
        indices = np.ascontiguousarray(self.out_indices, dtype=np.int64)
        susceptibility = np.ascontiguousarray(self.susceptibility, dtype=np.float64)
        node_count = len(indptr) - 1

        if node_count < 0 or indptr[0] != 0 or indptr[-1] != len(indices) or np.any(np.diff(indptr) < 0):
            raise InvalidParameterError("Malformed adjacency index pointer.")
        if len(susceptibility) != node_count:
            raise InvalidParameterError(
                f"Susceptibility length {len(susceptibility)} does not match node count {node_count}."
            )
        if len(self.id_map) != node_count:
            raise InvalidParameterError(f"Id map size {len(self.id_map)} does not match node count {node_count}.")
        if len(indices) and (indices.min() < 0 or indices.max() >= node_count):
            raise InvalidParameterError("Edge endpoint outside [0, node_count).")
        if np.any(np.isnan(susceptibility)) or np.any((susceptibility < 0.0) | (susceptibility > 1.0)):
            raise InvalidParameterError("Susceptibility values must lie in [0, 1].")

        sources = np.repeat(np.arange(node_count, dtype=np.int64), np.diff(indptr))
        if np.any(sources == indices):
            raise InvalidParameterError("Self-loops are not allowed.")
        # Strictly increasing targets inside each row: no duplicates, canonical order.
        if len(indices) > 1:
            same_row = sources[1:] == sources[:-1]
            if np.any(indices[1:][same_row] <= indices[:-1][same_row]):
                raise InvalidParameterError("Targets must be strictly increasing within each row.")

        for array in (indptr, indices, susceptibility):
            array.setflags(write=False)
        object.__setattr__(self, "out_indptr", indptr)
        object.__setattr__(self, "out_indices", indices)
        object.__setattr__(self, "susceptibility", susceptibility)

        reverse = self.to_csr_matrix().T.tocsr()
        reverse.sort_indices()
        in_indptr = np.asarray(reverse.indptr, dtype=np.int64)
        in_indices = np.asarray(reverse.indices, dtype=np.int64)
        in_indptr.setflags(write=False)
        in_indices.setflags(write=False)
        object.__setattr__(self, "in_indptr", in_indptr)
        object.__setattr__(self, "in_indices", in_indices)

    @staticmethod
    def from_edges(
        node_count: int,
        sources,
        targets,
        susceptibility=None,
        id_map: NodeIdMap | None = None,
    ) -> "DirectedGraph":
        """
        Factory Method: Build a graph from parallel source/target arrays.

        Self-loops are dropped and parallel edges collapsed; callers that need
        the counts use `clean_edges` first.

        Args:
            node_count: Number of nodes.
            sources: Edge sources (internal ids).
            targets: Edge targets (internal ids).
            susceptibility: Per-node values in [0, 1]; zeros when omitted.
            id_map: External id map; identity when omitted.

        Returns:
            DirectedGraph: New graph.
        """
        sources, targets, _, _ = clean_edges(sources, targets)
        if len(sources) and (min(sources.min(), targets.min()) < 0 or max(sources.max(), targets.max()) >= node_count):
            raise InvalidParameterError("Edge endpoint outside [0, node_count).")
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(np.bincount(sources, minlength=node_count), out=indptr[1:])

        return DirectedGraph(
            out_indptr=indptr,
            out_indices=targets,
            susceptibility=np.zeros(node_count) if susceptibility is None else np.asarray(susceptibility, dtype=float),
            id_map=id_map if id_map is not None else NodeIdMap.identity(node_count),
        )

    @property
    def node_count(self) -> int:
        """Number of nodes."""
        return len(self.out_indptr) - 1

    @property
    def edge_count(self) -> int:
        """Number of directed edges."""
        return len(self.out_indices)

    def out_neighbors(self, node: int) -> np.ndarray:
        """Successors of a node, ascending."""
        return self.out_indices[self.out_indptr[node] : self.out_indptr[node + 1]]

    def in_neighbors(self, node: int) -> np.ndarray:
        """Predecessors of a node, ascending."""
        return self.in_indices[self.in_indptr[node] : self.in_indptr[node + 1]]

    def out_degrees(self) -> np.ndarray:
        """Out-degree per node."""
        return np.diff(self.out_indptr)

    def in_degrees(self) -> np.ndarray:
        """In-degree per node."""
        return np.diff(self.in_indptr)

    def edge_sources(self) -> np.ndarray:
        """Source node of every edge, aligned with `out_indices`."""
        return np.repeat(np.arange(self.node_count, dtype=np.int64), self.out_degrees())

    def check_node(self, node: int) -> int:
        """
        Validate an internal node id.

        Raises:
            InvalidParameterError: If the id is outside the graph.
        """
        if not 0 <= int(node) < self.node_count:
            raise InvalidParameterError(f"Node {node} outside [0, {self.node_count}).")
        return int(node)

    def to_csr_matrix(self, weights: np.ndarray | None = None) -> sparse.csr_matrix:
        """
        Adjacency as a sparse matrix with A[u, v] = 1 (or weight) for edge u -> v.

        Args:
            weights: Optional per-edge values aligned with `out_indices`.

        Returns:
            sparse.csr_matrix: N x N matrix.
        """
        data = np.ones(self.edge_count) if weights is None else np.asarray(weights, dtype=float)
        return sparse.csr_matrix(
            (data, self.out_indices, self.out_indptr),
            shape=(self.node_count, self.node_count),
        )

    def with_susceptibility(self, values) -> "DirectedGraph":
        """
        Copy of the graph with new susceptibilities (validated).

        Args:
            values: Per-node susceptibilities in [0, 1].

        Returns:
            DirectedGraph: New graph sharing the adjacency arrays.
        """
        return replace(self, susceptibility=np.asarray(values, dtype=float))

    def same_as(self, other: "DirectedGraph") -> bool:
        """Structural and attribute equality (adjacency, susceptibility, id map)."""
        return (
            np.array_equal(self.out_indptr, other.out_indptr)
            and np.array_equal(self.out_indices, other.out_indices)
            and np.array_equal(self.susceptibility, other.susceptibility)
            and self.id_map.external_ids == other.id_map.external_ids
        )


def clean_edges(sources, targets) -> tuple[np.ndarray, np.ndarray, int, int]:
    """
    Drop self-loops, collapse parallel edges and sort edges by (source, target).

    Args:
        sources: Edge sources.
        targets: Edge targets.

    Returns:
        Tuple of (sources, targets, self_loops_dropped, duplicates_collapsed).
    """
    sources = np.asarray(sources, dtype=np.int64).ravel()
    targets = np.asarray(targets, dtype=np.int64).ravel()
    if len(sources) != len(targets):
        raise InvalidParameterError("Source and target arrays differ in length.")

    loops = sources == targets
    self_loops = int(loops.sum())
    sources, targets = sources[~loops], targets[~loops]

    if len(sources) == 0:
        return sources, targets, self_loops, 0

    pairs = np.unique(np.column_stack([sources, targets]), axis=0)
    duplicates = len(sources) - len(pairs)
    return pairs[:, 0].copy(), pairs[:, 1].copy(), self_loops, duplicates
