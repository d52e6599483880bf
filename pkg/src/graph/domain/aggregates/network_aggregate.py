"""
Graph Domain Aggregate - Network Aggregate Module.
"""

from src.shared.domain.aggregates import BaseAggregate
from src.graph.domain.entities import DirectedGraph
from src.graph.domain.events import ComponentExtractedEvent, NetworkLoadedEvent, SusceptibilityAssignedEvent
from src.graph.domain.services import GraphStructureService, SusceptibilityAssignmentService
from src.graph.domain.value_objects import EdgeListLoadReport, SusceptibilityLoadReport


class NetworkAggregate(BaseAggregate):
    """
    Aggregate Root: The network under preparation.

    Responsibilities:
    - Hold the current (immutable) graph
    - Apply load-time preprocessing (component extraction, susceptibility)
    - Generate domain events describing each step
    """

    def __init__(self, graph: DirectedGraph):
        """
        Initialize the aggregate around a graph.

        Args:
            graph: Starting graph.
        """
        super().__init__()
        self._graph = graph

    @property
    def graph(self) -> DirectedGraph:
        """Get the current graph."""
        return self._graph

    @staticmethod
    def loaded(graph: DirectedGraph, report: EdgeListLoadReport, source: str) -> "NetworkAggregate":
        """
        Factory Method: Aggregate for a freshly read edge list.

        Args:
            graph: Graph read from the file.
            report: Load counts.
            source: Path or description of the input.

        Returns:
            NetworkAggregate: Aggregate with a pending NetworkLoadedEvent.
        """
        aggregate = NetworkAggregate(graph)
        aggregate._add_domain_event(
            NetworkLoadedEvent(
                source=source,
                node_count=report.node_count,
                edge_count=report.edge_count,
                self_loops_dropped=report.self_loops_dropped,
                duplicates_collapsed=report.duplicates_collapsed,
            )
        )
        return aggregate

    def extract_largest_component(self) -> DirectedGraph:
        """
        Business logic: Keep the largest weakly connected component.

        Returns:
            DirectedGraph: The restricted graph.
        """
        before = self._graph.node_count
        self._graph = GraphStructureService.largest_weakly_connected_component(self._graph)
        self._add_domain_event(
            ComponentExtractedEvent(
                nodes_before=before,
                nodes_after=self._graph.node_count,
                edges_after=self._graph.edge_count,
            )
        )
        return self._graph

    def attach_susceptibility(self, graph: DirectedGraph, report: SusceptibilityLoadReport) -> DirectedGraph:
        """
        Business logic: Replace the graph by its annotated copy read from a file.

        Args:
            graph: Annotated graph.
            report: Assignment counts.

        Returns:
            DirectedGraph: The annotated graph.
        """
        self._graph = graph
        self._add_domain_event(
            SusceptibilityAssignedEvent(
                method="file",
                assigned=report.assigned,
                unlisted=report.unlisted,
                unknown_ids=report.unknown_ids,
                mean_susceptibility=self._mean_susceptibility(),
            )
        )
        return self._graph

    def bootstrap_susceptibility(self, empirical_values, rng_seed: int) -> DirectedGraph:
        """
        Business logic: Resample susceptibilities from an empirical distribution.

        Args:
            empirical_values: Observed susceptibilities.
            rng_seed: Seed of the resampling stream.

        Returns:
            DirectedGraph: The annotated graph.
        """
        self._graph = SusceptibilityAssignmentService.assign_from_distribution(self._graph, empirical_values, rng_seed)
        self._add_domain_event(
            SusceptibilityAssignedEvent(
                method="bootstrap",
                assigned=self._graph.node_count,
                unlisted=0,
                unknown_ids=0,
                mean_susceptibility=self._mean_susceptibility(),
            )
        )
        return self._graph

    def _mean_susceptibility(self) -> float:
        if self._graph.node_count == 0:
            return 0.0
        return float(self._graph.susceptibility.mean())
