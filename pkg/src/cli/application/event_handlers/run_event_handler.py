"""
CLI Application Event Handler - Run outcome events.
"""

from src.shared.infrastructure import get_logger

from src.cli.domain.events import RunCompletedEvent, RunFailedEvent

logger = get_logger(__name__)


class RunEventHandler:
    """
    Handler for run outcome events.
    """

    @staticmethod
    def handle_completed(event: RunCompletedEvent) -> None:
        """
        Handle run completed event.

        Args:
            event: The RunCompletedEvent instance.
        """
        logger.info(
            "[EVENT] Run completed | Command: %s | Outputs: %d in %s | Duration: %.1f s",
            event.command,
            event.output_count,
            event.output_dir,
            event.duration_seconds,
        )

    @staticmethod
    def handle_failed(event: RunFailedEvent) -> None:
        """
        Handle run failed event.

        Args:
            event: The RunFailedEvent instance.
        """
        logger.error(
            "[EVENT] Run failed | Command: %s | %s: %s | Exit code: %d",
            event.command,
            event.error_type,
            event.message,
            event.exit_code,
        )
