"""
CLI Domain Aggregate - Run Aggregate Module.
"""

import time
from datetime import datetime

from src.shared.domain.aggregates import BaseAggregate
from src.cli.domain.events import RunCompletedEvent, RunFailedEvent


class RunAggregate(BaseAggregate):
    """
    Aggregate Root: One command invocation from start to outcome.

    Responsibilities:
    - Track the wall-clock duration and the input files read
    - Generate the completion or failure event (exactly one per run)
    """

    def __init__(self, command: str):
        """
        Start a run.

        Args:
            command: Subcommand name.
        """
        super().__init__()
        self._command = command
        self._started = time.perf_counter()
        self._started_at = datetime.now().isoformat(timespec="seconds")
        self._inputs: list[str] = []
        self._finished = False

    @property
    def command(self) -> str:
        return self._command

    @property
    def started_at(self) -> str:
        return self._started_at

    @property
    def inputs(self) -> list[str]:
        """Input files recorded so far, in order, without repeats."""
        return list(self._inputs)

    def elapsed(self) -> float:
        """Seconds since the run started."""
        return time.perf_counter() - self._started

    def record_input(self, path) -> None:
        """Remember an input file (None is ignored)."""
        if path is not None and str(path) not in self._inputs:
            self._inputs.append(str(path))

    def complete(self, output_dir: str, output_count: int, duration: float) -> None:
        """
        Business logic: Mark the run successful.

        Raises:
            RuntimeError: If the run already has an outcome.
        """
        self._finish()
        self._add_domain_event(
            RunCompletedEvent(
                command=self._command,
                output_dir=str(output_dir),
                output_count=output_count,
                duration_seconds=duration,
            )
        )

    def fail(self, error: BaseException, exit_code: int) -> None:
        """
        Business logic: Mark the run failed.

        Raises:
            RuntimeError: If the run already has an outcome.
        """
        self._finish()
        self._add_domain_event(
            RunFailedEvent(
                command=self._command,
                error_type=type(error).__name__,
                message=str(error),
                exit_code=exit_code,
            )
        )

    def _finish(self) -> None:
        if self._finished:
            raise RuntimeError(f"Run '{self._command}' already has an outcome.")
        self._finished = True
