"""
Graph Application Service for loading and preparing networks.
"""

from pathlib import Path

from src.shared.domain.events import IDomainEventPublisher
from src.shared.application.services import BaseService
from src.shared.infrastructure import get_logger
from src.graph.domain.aggregates import NetworkAggregate
from src.graph.domain.entities import DirectedGraph
from src.graph.domain.value_objects import SusceptibilityLoadReport
from src.graph.infrastructure.repositories import EdgeListRepository, IdMapRepository, SusceptibilityRepository

logger = get_logger(__name__)


class NetworkService(BaseService):
    """
    Application Service for network preparation.

    Coordinates workflow:
    1. Read the edge list (self-loops dropped, parallel edges collapsed)
    2. Optionally keep the largest weakly connected component
    3. Attach susceptibilities from a file or by bootstrap resampling
    4. Persist the id map and publish the preparation events
    """

    def __init__(self, event_bus: IDomainEventPublisher | None = None):
        super().__init__(repository=None, event_bus=event_bus)

    def load_edge_list(self, path: str | Path, id_map_out: str | Path | None = None) -> DirectedGraph:
        """
        Use case: Read an edge list (susceptibilities unset, default 0).

        Args:
            path: Edge list file.
            id_map_out: Where to persist the id map (optional).

        Returns:
            DirectedGraph: Loaded graph.
        """
        graph, report = EdgeListRepository(path).load()
        aggregate = NetworkAggregate.loaded(graph, report, source=str(path))
        self.publish_events(aggregate)
        if id_map_out is not None:
            IdMapRepository(id_map_out).save(graph.id_map)
        return graph

    def load_susceptibility(
        self, graph: DirectedGraph, path: str | Path
    ) -> tuple[DirectedGraph, SusceptibilityLoadReport]:
        """
        Use case: Attach susceptibilities listed in a file.

        Args:
            graph: Graph to annotate.
            path: Susceptibility file.

        Returns:
            Tuple of (annotated graph, load report).
        """
        annotated, report = SusceptibilityRepository(path).load_into(graph)
        aggregate = NetworkAggregate(graph)
        aggregate.attach_susceptibility(annotated, report)
        self.publish_events(aggregate)
        return annotated, report

    def prepare_network(
        self,
        edge_list: str | Path,
        susceptibility: str | Path | None = None,
        bootstrap_from: str | Path | None = None,
        bootstrap_seed: int = 0,
        largest_component: bool = True,
        id_map_out: str | Path | None = None,
    ) -> DirectedGraph:
        """
        Use case: Full load-time preprocessing of a network.

        Susceptibilities are attached after component extraction so that the
        report counts only nodes of the final graph.

        Args:
            edge_list: Edge list file.
            susceptibility: Per-node susceptibility file (optional).
            bootstrap_from: File whose values are resampled onto every node (optional).
            bootstrap_seed: Seed of the resampling stream.
            largest_component: Keep only the largest weakly connected component.
            id_map_out: Where to persist the final id map (optional).

        Returns:
            DirectedGraph: Prepared graph.
        """
        graph, report = EdgeListRepository(edge_list).load()
        aggregate = NetworkAggregate.loaded(graph, report, source=str(edge_list))

        if largest_component:
            aggregate.extract_largest_component()

        if susceptibility is not None:
            annotated, sus_report = SusceptibilityRepository(susceptibility).load_into(aggregate.graph)
            aggregate.attach_susceptibility(annotated, sus_report)
        elif bootstrap_from is not None:
            values = SusceptibilityRepository(bootstrap_from).load_values()
            aggregate.bootstrap_susceptibility(values, bootstrap_seed)
        else:
            logger.warning("No susceptibility source given; every node keeps susceptibility 0.")

        self.publish_events(aggregate)

        if id_map_out is not None:
            IdMapRepository(id_map_out).save(aggregate.graph.id_map)
        return aggregate.graph
