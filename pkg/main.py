"""
Misinformation Interventions - Main Application Entry Point

This module wires logging, the domain event bus, the event handlers and the
application services, then dispatches the command line.
"""

import sys

from config import pdict  # Serves as the project configuration dictionary.
from src.shared.infrastructure.logging_config import get_logger, setup_logging

from src.cli.interface import CommandLineApp
from src.cli.application.event_handlers import RunEventHandler
from src.cli.application.services import CommandService
from src.cli.domain.events import RunCompletedEvent, RunFailedEvent
from src.graph.application.event_handlers import NetworkEventHandler
from src.graph.domain.events import ComponentExtractedEvent, NetworkLoadedEvent, SusceptibilityAssignedEvent
from src.experiments.infrastructure.repositories import ExperimentPresetRepository
from src.shared.domain.events import IDomainEventPublisher
from src.shared.infrastructure.event_bus import InMemoryEventBus

logger = get_logger(__name__)


def setup_event_handlers(event_bus: IDomainEventPublisher):
    """
    Setup event handlers for domain events.
    """
    # Subscribe handlers for network preparation events.
    event_bus.subscribe(NetworkLoadedEvent, NetworkEventHandler.handle_loaded)
    event_bus.subscribe(ComponentExtractedEvent, NetworkEventHandler.handle_component_extracted)
    event_bus.subscribe(SusceptibilityAssignedEvent, NetworkEventHandler.handle_susceptibility_assigned)

    # Subscribe handlers for run outcome events.
    event_bus.subscribe(RunCompletedEvent, RunEventHandler.handle_completed)
    event_bus.subscribe(RunFailedEvent, RunEventHandler.handle_failed)


def build_app(event_bus: IDomainEventPublisher) -> CommandLineApp:
    """
    Setup the application services and the command-line orchestrator.
    """
    command_service = CommandService(
        version=pdict["version"],
        default_output_dir=pdict["output_folder"],
        event_bus=event_bus,
    )
    presets = ExperimentPresetRepository(pdict["dataset_folder"])
    return CommandLineApp(
        command_service=command_service,
        presets=presets,
        env_output_dir=pdict["env_output_dir"],
        env_threads=pdict["env_threads"],
    )


def main(argv: list[str] | None = None) -> int:
    """
    Main: Runs one subcommand and returns its exit code.
    """
    # Setup logging configuration.
    setup_logging()

    # Initialize Domain Event Bus (infrastructure implementation).
    event_bus: IDomainEventPublisher = InMemoryEventBus()
    setup_event_handlers(event_bus)

    app = build_app(event_bus)
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
