"""
Unit Tests for ExitCodeService and RunAggregate.

Test categories:
- Exit code classification tests
- Run lifecycle tests
"""

import pytest

from src.cli.domain.aggregates import RunAggregate
from src.cli.domain.events import RunCompletedEvent, RunFailedEvent
from src.cli.domain.services import ExitCode, ExitCodeService
from src.shared.domain.exceptions import (
    CascadeDataError,
    ConfigurationError,
    GraphFormatError,
    InvalidParameterError,
    SpectralConvergenceError,
    SurveyDataError,
    UnknownPresetError,
)


class TestExitCodeService:
    """Test exit_code_for."""

    @pytest.mark.parametrize(
        ("error", "code"),
        [
            (ConfigurationError("bad"), ExitCode.CONFIGURATION),
            (UnknownPresetError("x", ["a"]), ExitCode.CONFIGURATION),
            (FileNotFoundError("missing"), ExitCode.CONFIGURATION),
            (SurveyDataError("bad"), ExitCode.INPUT_DATA),
            (CascadeDataError("bad"), ExitCode.INPUT_DATA),
            (InvalidParameterError("bad"), ExitCode.INPUT_DATA),
            (RuntimeError("boom"), ExitCode.UNEXPECTED),
        ],
    )
    def test_classification(self, error, code):
        """Test the documented codes."""
        assert ExitCodeService.exit_code_for(error) == code

    def test_graph_and_numerical_errors(self):
        """Test input and numerical failures."""
        assert ExitCodeService.exit_code_for(GraphFormatError("bad", line_number=3)) == ExitCode.INPUT_DATA
        assert ExitCodeService.exit_code_for(SpectralConvergenceError(1e-3, 50)) == ExitCode.NUMERICAL


class TestRunAggregate:
    """Test the run lifecycle."""

    def test_inputs_without_repeats(self):
        """Test order and de-duplication."""
        run = RunAggregate("simulate")
        for path in ("a.txt", None, "b.txt", "a.txt"):
            run.record_input(path)

        assert run.inputs == ["a.txt", "b.txt"]

    def test_complete_raises_one_event(self):
        """Test the completion event."""
        run = RunAggregate("qmf")

        run.complete("out", 2, 1.5)

        events = run.pull_domain_events()
        assert len(events) == 1
        assert isinstance(events[0], RunCompletedEvent)
        assert events[0].output_count == 2

    def test_fail_records_error(self):
        """Test the failure event."""
        run = RunAggregate("qmf")

        run.fail(ValueError("bad"), ExitCode.INPUT_DATA)

        event = run.pull_domain_events()[0]
        assert isinstance(event, RunFailedEvent)
        assert (event.error_type, event.message, event.exit_code) == ("ValueError", "bad", 3)

    def test_single_outcome(self):
        """Test that a run cannot finish twice."""
        run = RunAggregate("qmf")
        run.complete("out", 0, 0.0)

        with pytest.raises(RuntimeError, match="already"):
            run.fail(ValueError("late"), 1)
