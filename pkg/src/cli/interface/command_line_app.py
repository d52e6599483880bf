"""
Command-line application for the misinformation intervention simulator.

A thin orchestrator: parses arguments, layers the run configuration
(defaults, preset, config file, environment, flags, `--set` overrides) and
hands the command to the CommandService. Results go to files only; progress
goes to standard error.
"""

import argparse
import logging
import os

from src.shared.domain.exceptions import ConfigurationError
from src.shared.infrastructure import get_logger, setup_logging
from src.experiments.infrastructure.repositories import ExperimentPresetRepository
from src.cli.application.services import COMMANDS, CommandService
from src.cli.domain.services import ConfigMergeService, ExitCode, ExitCodeService
from src.cli.domain.value_objects import RunConfig
from src.cli.infrastructure.repositories import JSONConfigRepository

logger = get_logger(__name__)

_HELP = {
    "simulate": "Run one cascade or a Monte Carlo batch.",
    "sweep": "Prevalence grid over strength and contagiousness, scale or timing.",
    "targeting": "Prevalence differentials of the targeting strategies against random targeting.",
    "scenarios": "Single and combined interventions relative to the no-intervention baseline.",
    "calibrate-diffusion": "Fit contagiousness and delay rate to retweet cascades.",
    "calibrate-intervention": "Estimate an intervention strength from survey responses.",
    "qmf": "Spectral radius and mean-field critical curves.",
    "seed-select": "Select the diffusion seed node.",
}


class CommandLineApp:
    """
    Command-line orchestrator.

    Responsibilities:
    - Build the argument parser (one subcommand per use case)
    - Resolve the run configuration with path-qualified validation
    - Map failures to the documented exit codes
    """

    def __init__(
        self,
        command_service: CommandService,
        presets: ExperimentPresetRepository,
        env_output_dir: str = "MISINFO_OUTPUT_DIR",
        env_threads: str = "MISINFO_THREADS",
    ):
        self.command_service = command_service
        self.presets = presets
        self.env_output_dir = env_output_dir
        self.env_threads = env_threads

    def build_parser(self) -> argparse.ArgumentParser:
        """Argument parser with one subparser per command."""
        parser = argparse.ArgumentParser(
            prog="misinfo-interventions",
            description="Simulate user-level misinformation interventions on directed networks.",
        )
        parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")
        subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
        for command in COMMANDS:
            sub = subparsers.add_parser(command, help=_HELP[command], description=_HELP[command])
            sub.add_argument("--config", help="JSON run configuration (see docs/CONFIG.md).")
            sub.add_argument("--preset", help="Named configuration preset (applied before --config).")
            sub.add_argument(
                "--set",
                dest="overrides",
                action="append",
                default=[],
                metavar="KEY=VALUE",
                help="Override a configuration value by dotted path, e.g. params.eta=0.05 (repeatable).",
            )
            sub.add_argument("--output-dir", help="Output directory (overrides config and environment).")
            sub.add_argument("--threads", type=int, help="Worker processes (default: available cores).")
            sub.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="Log at DEBUG level.")
        return parser

    def resolve_config(self, args: argparse.Namespace) -> RunConfig:
        """
        Layer the configuration sources.

        Raises:
            ConfigurationError: On schema violations or a preset of another command.
            UnknownPresetError: On an unknown preset name.
            FileNotFoundError: If the config file does not exist.
        """
        layers: list[dict] = []
        if args.preset:
            preset = self.presets.load(args.preset)
            if preset.get("command") not in (None, args.command):
                raise ConfigurationError(
                    f"preset '{args.preset}' belongs to the '{preset['command']}' command", path="preset"
                )
            layers.append(preset)
        if args.config:
            layers.append(JSONConfigRepository(args.config).load())
        layers.append(self._environment_layer())

        flags: dict = {"command": args.command}
        if args.output_dir:
            flags["output_dir"] = args.output_dir
        if args.threads is not None:
            flags["workers"] = args.threads
        layers.append(flags)
        return ConfigMergeService.resolve(layers, args.overrides)

    def _environment_layer(self) -> dict:
        layer: dict = {}
        output_dir = os.environ.get(self.env_output_dir)
        if output_dir:
            layer["output_dir"] = output_dir
        threads = os.environ.get(self.env_threads)
        if threads:
            try:
                layer["workers"] = int(threads)
            except ValueError as error:
                raise ConfigurationError(f"must be an integer, got '{threads}'", path=self.env_threads) from error
        return layer

    def run(self, argv: list[str] | None = None) -> int:
        """
        Parse, resolve and execute.

        Args:
            argv: Arguments without the program name (sys.argv[1:] when omitted).

        Returns:
            int: Exit code.
        """
        args = self.build_parser().parse_args(argv)
        if getattr(args, "verbose", False):
            setup_logging(logging.DEBUG)

        try:
            config = self.resolve_config(args)
            output_dir = self.command_service.execute(args.command, config, config_path=args.config)
        except Exception as error:
            code = ExitCodeService.exit_code_for(error)
            if code == ExitCode.UNEXPECTED:
                logger.error("Unexpected error in '%s': %s", args.command, error, exc_info=True)
            else:
                logger.error("%s failed: %s", args.command, error)
            return code

        logger.info("Outputs written to %s", output_dir)
        return ExitCode.OK
