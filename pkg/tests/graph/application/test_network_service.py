"""
Unit Tests for NetworkService and NetworkEventHandler.

Test categories:
- Edge list use case tests
- Network preparation tests
- Event handler logging tests
"""

# pylint: disable=redefined-outer-name

import logging
from unittest.mock import Mock

import pytest

from src.graph.application.event_handlers import NetworkEventHandler
from src.graph.application.services import NetworkService
from src.graph.domain.events import ComponentExtractedEvent, NetworkLoadedEvent, SusceptibilityAssignedEvent
from src.shared.domain.events import IDomainEventPublisher
from src.shared.infrastructure.event_bus import InMemoryEventBus
from tests.conftest import write_text


@pytest.fixture
def mock_event_bus():
    """Mock publisher port."""
    return Mock(spec=IDomainEventPublisher)


@pytest.fixture
def split_edge_list(tmp_path):
    """Edge list with a three-node component and a separate pair."""
    return write_text(tmp_path / "edges.txt", "a b\nb c\nc a\nx y\n")


def published(mock_event_bus):
    """Events handed to publish_all, flattened."""
    return [event for call in mock_event_bus.publish_all.call_args_list for event in call.args[0]]


class TestLoadEdgeList:
    """Test load_edge_list."""

    def test_load_publishes_loaded_event_and_saves_ids(self, edge_list_file, mock_event_bus, tmp_path):
        """Test the event and the persisted id map."""
        service = NetworkService(event_bus=mock_event_bus)

        graph = service.load_edge_list(edge_list_file, id_map_out=tmp_path / "ids.tsv")

        assert graph.node_count == 3
        assert [type(event) for event in published(mock_event_bus)] == [NetworkLoadedEvent]
        assert (tmp_path / "ids.tsv").read_text(encoding="utf-8").startswith("alice\t0")

    def test_load_susceptibility_publishes_assignment(self, edge_list_file, susceptibility_file, mock_event_bus):
        """Test the susceptibility use case."""
        service = NetworkService(event_bus=mock_event_bus)
        graph = service.load_edge_list(edge_list_file)

        annotated, report = service.load_susceptibility(graph, susceptibility_file)

        assert annotated.susceptibility.max() == 1.0
        assert report.complete
        assert isinstance(published(mock_event_bus)[-1], SusceptibilityAssignedEvent)


class TestPrepareNetwork:
    """Test prepare_network."""

    def test_component_then_susceptibility(self, split_edge_list, mock_event_bus, tmp_path):
        """Test that coverage is counted on the final component only."""
        susceptibility = write_text(tmp_path / "s.txt", "a 1\nb 0.5\nc 0.5\n")

        graph = NetworkService(event_bus=mock_event_bus).prepare_network(split_edge_list, susceptibility=susceptibility)

        assert graph.id_map.external_ids == ("a", "b", "c")
        events = published(mock_event_bus)
        assert [type(event) for event in events] == [
            NetworkLoadedEvent,
            ComponentExtractedEvent,
            SusceptibilityAssignedEvent,
        ]
        assert events[-1].unlisted == 0

    def test_keep_all_components(self, split_edge_list):
        """Test that extraction can be switched off."""
        graph = NetworkService().prepare_network(split_edge_list, largest_component=False)

        assert graph.node_count == 5
        assert graph.susceptibility.sum() == 0.0

    def test_bootstrap_from_file(self, split_edge_list, tmp_path):
        """Test bootstrap assignment with a fixed seed."""
        values = write_text(tmp_path / "values.txt", "p 0.3\nq 0.3\n")

        graph = NetworkService().prepare_network(split_edge_list, bootstrap_from=values, bootstrap_seed=5)

        assert graph.susceptibility.tolist() == [0.3, 0.3, 0.3]

    def test_persists_final_id_map(self, split_edge_list, tmp_path):
        """Test that the saved map describes the prepared graph."""
        NetworkService().prepare_network(split_edge_list, id_map_out=tmp_path / "ids.tsv")

        assert (tmp_path / "ids.tsv").read_text(encoding="utf-8").splitlines() == ["a\t0", "b\t1", "c\t2"]


class TestNetworkEventHandler:
    """Test the logging handlers wired to a real bus."""

    def test_handlers_log_events(self, split_edge_list, caplog):
        """Test that every preparation step is logged."""
        bus = InMemoryEventBus()
        bus.subscribe(NetworkLoadedEvent, NetworkEventHandler.handle_loaded)
        bus.subscribe(ComponentExtractedEvent, NetworkEventHandler.handle_component_extracted)
        bus.subscribe(SusceptibilityAssignedEvent, NetworkEventHandler.handle_susceptibility_assigned)

        with caplog.at_level(logging.INFO):
            NetworkService(event_bus=bus).prepare_network(split_edge_list)

        assert "[EVENT] Network loaded" in caplog.text
        assert "Nodes: 5 -> 3" in caplog.text

    def test_incomplete_coverage_is_a_warning(self, caplog):
        """Test the warning for unlisted nodes."""
        event = SusceptibilityAssignedEvent(method="file", assigned=1, unlisted=2, unknown_ids=0, mean_susceptibility=0.2)

        with caplog.at_level(logging.WARNING):
            NetworkEventHandler.handle_susceptibility_assigned(event)

        assert any(record.levelno == logging.WARNING and "Unlisted nodes: 2" in record.message for record in caplog.records)
