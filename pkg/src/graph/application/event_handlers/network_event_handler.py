"""
Graph Application Event Handler - Network preparation events.
"""

from src.shared.infrastructure import get_logger

from src.graph.domain.events import ComponentExtractedEvent, NetworkLoadedEvent, SusceptibilityAssignedEvent

logger = get_logger(__name__)


class NetworkEventHandler:
    """
    Handler for network preparation events.
    """

    @staticmethod
    def handle_loaded(event: NetworkLoadedEvent) -> None:
        """
        Handle network loaded event.

        Args:
            event: The NetworkLoadedEvent instance.
        """
        logger.info(
            "[EVENT] Network loaded from %s | Nodes: %d | Edges: %d | Self-loops dropped: %d | Duplicates: %d",
            event.source,
            event.node_count,
            event.edge_count,
            event.self_loops_dropped,
            event.duplicates_collapsed,
        )

    @staticmethod
    def handle_component_extracted(event: ComponentExtractedEvent) -> None:
        """
        Handle component extracted event.

        Args:
            event: The ComponentExtractedEvent instance.
        """
        logger.info(
            "[EVENT] Largest weakly connected component kept | Nodes: %d -> %d | Edges: %d",
            event.nodes_before,
            event.nodes_after,
            event.edges_after,
        )

    @staticmethod
    def handle_susceptibility_assigned(event: SusceptibilityAssignedEvent) -> None:
        """
        Handle susceptibility assigned event; incomplete coverage is logged as a warning.

        Args:
            event: The SusceptibilityAssignedEvent instance.
        """
        logger.info(
            "[EVENT] Susceptibility assigned (%s) | Assigned: %d | Mean: %.4f",
            event.method,
            event.assigned,
            event.mean_susceptibility,
        )
        if event.unlisted or event.unknown_ids:
            logger.warning(
                "[EVENT] Susceptibility coverage incomplete | Unlisted nodes: %d | Unknown ids: %d",
                event.unlisted,
                event.unknown_ids,
            )
