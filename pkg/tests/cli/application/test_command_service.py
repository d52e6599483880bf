"""
Unit Tests for CommandService.

Test categories:
- End-to-end command tests
- Manifest tests
- Configuration error tests
- Run outcome event tests
"""

# pylint: disable=redefined-outer-name

import json
from unittest.mock import MagicMock

import pytest

from src.cli.application.services import COMMANDS, CommandService
from src.cli.domain.events import RunCompletedEvent, RunFailedEvent
from src.cli.domain.services import ConfigMergeService
from src.shared.domain.events import IDomainEventPublisher
from src.shared.domain.exceptions import ConfigurationError

SYNTHETIC = {"graph": {"synthetic": {"node_count": 60, "attachment": 2, "seed": 1, "susceptibility": 1.0}}}


@pytest.fixture
def bus():
    """Mocked event publisher."""
    return MagicMock(spec=IDomainEventPublisher)


@pytest.fixture
def service(tmp_path, bus):
    """Command service writing below tmp_path."""
    return CommandService(version="1.0.0", default_output_dir=tmp_path / "results", event_bus=bus)


def resolve(command: str, *layers: dict, overrides: list[str] | None = None):
    """Resolved configuration for one command with a single worker."""
    return ConfigMergeService.resolve([{"command": command, "workers": 1}, *layers], overrides)


def read_json(path):
    """Parsed JSON file."""
    return json.loads(path.read_text(encoding="utf-8"))


class TestCommands:
    """Run commands end to end."""

    def test_every_command_has_a_handler(self, service):
        """Test that the command table and handlers agree."""
        assert set(service._handlers()) == set(COMMANDS)  # pylint: disable=protected-access

    def test_seed_select_from_files(self, service, edge_list_file, susceptibility_file):
        """Test the seed file and the input digests."""
        config = resolve(
            "seed-select", {"graph": {"edge_list": str(edge_list_file), "susceptibility": str(susceptibility_file)}}
        )

        output_dir = service.execute("seed-select", config)

        seed = read_json(output_dir / "seed.json")
        assert seed["external_id"] == "alice"
        assert seed["susceptibility"] == 1.0
        manifest = read_json(output_dir / "manifest.json")
        assert set(manifest["inputs"]) == {str(edge_list_file), str(susceptibility_file)}
        assert manifest["master_seed"] is None
        assert list(manifest["outputs"]) == ["seed.json"]

    def test_simulate_single_run(self, service, tmp_path):
        """Test the single-cascade outputs and its seed in the manifest."""
        config = resolve(
            "simulate",
            SYNTHETIC,
            {"output_dir": str(tmp_path / "single"), "plan": {"nudge": {"epsilon": 0.2}}},
            overrides=["simulate.rng_seed=11", "params.eta=0.3"],
        )

        output_dir = service.execute("simulate", config)

        assert output_dir == tmp_path / "single"
        assert {path.name for path in output_dir.iterdir()} == {
            "activations.csv",
            "curve.csv",
            "summary.json",
            "manifest.json",
        }
        assert read_json(output_dir / "manifest.json")["master_seed"] == 11

    def test_simulate_batch_uses_master_seed(self, service):
        """Test the Monte Carlo outputs."""
        config = resolve("simulate", SYNTHETIC, overrides=["simulate.runs=5", "simulate.master_seed=4"])

        output_dir = service.execute("simulate", config)

        assert not (output_dir / "activations.csv").exists()
        assert read_json(output_dir / "manifest.json")["master_seed"] == 4

    def test_qmf_with_curve(self, service):
        """Test the spectral report and a requested curve."""
        config = resolve(
            "qmf",
            SYNTHETIC,
            {"qmf": {"eta": 0.1, "curves": [{"intervention": "nudge", "vary": "eta", "values": [0.1, 0.5]}]}},
        )

        output_dir = service.execute("qmf", config)

        assert (output_dir / "spectral.json").is_file()
        assert (output_dir / "critical_nudge_eta.csv").is_file()

    def test_calibrate_intervention(self, service, tmp_path):
        """Test the strength outputs."""
        survey = tmp_path / "survey.csv"
        survey.write_text(
            "item_id,participant_id,condition,response,scale_min,scale_max\nq1,p1,control,5,1,5\nq1,p2,treatment,3,1,5\n",
            encoding="utf-8",
        )

        config = resolve("calibrate-intervention", {"calibration": {"survey": str(survey)}})

        output_dir = service.execute("calibrate-intervention", config)

        assert read_json(output_dir / "strength.json")["mean_epsilon"] == pytest.approx(0.5)


class TestConfigurationErrors:
    """Test path-qualified failures."""

    def test_unknown_command(self, service):
        """Test a command outside the table."""
        with pytest.raises(ConfigurationError, match="unknown command"):
            service.execute("plot", resolve("plot"))

    def test_missing_survey_path(self, service):
        """Test the required file path."""
        with pytest.raises(ConfigurationError) as error:
            service.execute("calibrate-intervention", resolve("calibrate-intervention"))

        assert error.value.path == "calibration.survey"

    def test_axis_must_fit_kind(self, service):
        """Test a nudge sweep over delta."""
        config = resolve("sweep", SYNTHETIC, {"sweep": {"kind": "nudge", "axis": "delta"}})

        with pytest.raises(ConfigurationError) as error:
            service.execute("sweep", config)

        assert error.value.path == "sweep.axis"

    def test_no_scenarios(self, service):
        """Test that an empty scenario list is rejected."""
        config = resolve("scenarios", SYNTHETIC, {"scenarios": {"defaults": False}})

        with pytest.raises(ConfigurationError, match="no scenario"):
            service.execute("scenarios", config)

    def test_unknown_seed_node(self, service):
        """Test a configured seed missing from the graph."""
        config = resolve("simulate", SYNTHETIC, overrides=["seed.node=nobody"])

        with pytest.raises(ConfigurationError) as error:
            service.execute("simulate", config)

        assert error.value.path == "seed.node"

    def test_invalid_workers(self, service):
        """Test the worker count check."""
        config = ConfigMergeService.resolve([{"command": "simulate", "workers": 0}, SYNTHETIC])

        with pytest.raises(ConfigurationError, match="positive integer"):
            service.execute("simulate", config)


class TestRunEvents:
    """Test the published run outcome."""

    def test_completed_event(self, service, bus):
        """Test one completion event per successful run."""
        service.execute("seed-select", resolve("seed-select", SYNTHETIC))

        events = bus.publish_all.call_args.args[0]
        assert [type(event) for event in events] == [RunCompletedEvent]
        assert events[0].output_count == 2

    def test_failed_event_carries_exit_code(self, service, bus):
        """Test that failures publish their exit code before re-raising."""
        with pytest.raises(ConfigurationError):
            service.execute("calibrate-intervention", resolve("calibrate-intervention"))

        event = bus.publish_all.call_args.args[0][0]
        assert isinstance(event, RunFailedEvent)
        assert event.exit_code == 2
