"""
CLI Application Service - Subcommands.

Each `cmd_*` use case reads a resolved RunConfig, runs the owning context's
application services and writes its outputs; `execute` wraps a command with
the run aggregate and the manifest.
"""

import os
from collections.abc import Callable
from pathlib import Path

from src.shared.application.services import BaseService
from src.shared.domain.constants import ExperimentDefaults
from src.shared.domain.enums import InterventionKind, SuccessEvaluation, TargetStrategy
from src.shared.domain.events import IDomainEventPublisher
from src.shared.domain.exceptions import ConfigurationError, InvalidParameterError
from src.shared.infrastructure import get_logger
from src.shared.infrastructure.repositories import OutputWriter
from src.graph.application.services import NetworkService
from src.graph.domain.entities import DirectedGraph
from src.interventions.domain.value_objects import InterventionPlan
from src.diffusion.application.services import DiffusionService
from src.diffusion.domain.value_objects import DiffusionParams
from src.diffusion.infrastructure.repositories import SimulationOutputRepository
from src.qmf.application.services import QMFService
from src.qmf.domain.services import CriticalConditionService
from src.qmf.domain.value_objects import CurveSpec
from src.qmf.infrastructure.repositories import QMFOutputRepository
from src.calibration.application.services import CalibrationService
from src.calibration.infrastructure.repositories import CalibrationOutputRepository
from src.experiments.application.services import ExperimentService
from src.experiments.domain.services import ExperimentGridService, ScenarioFactory, SyntheticNetworkService
from src.experiments.domain.value_objects import Scenario
from src.experiments.infrastructure.repositories import ExperimentOutputRepository
from src.cli.domain.aggregates import RunAggregate
from src.cli.domain.services import ExitCodeService
from src.cli.domain.value_objects import RunConfig, RunManifest, parse_grid
from src.cli.infrastructure.repositories import ManifestRepository

logger = get_logger(__name__)

COMMANDS = (
    "simulate",
    "sweep",
    "targeting",
    "scenarios",
    "calibrate-diffusion",
    "calibrate-intervention",
    "qmf",
    "seed-select",
)

# Config key of the seed every random stream of a command derives from.
_MASTER_SEED_KEYS = {
    "sweep": "sweep.master_seed",
    "targeting": "targeting.master_seed",
    "scenarios": "scenarios.master_seed",
    "calibrate-diffusion": "calibration.master_seed",
}


class CommandService(BaseService):
    """
    Application Service for the command-line subcommands.

    Coordinates workflow:
    1. Prepare the network (edge list or synthetic) and the diffusion seed
    2. Delegate to the graph, diffusion, qmf, calibration and experiments services
    3. Write outputs and the run manifest; publish the run outcome
    """

    def __init__(
        self,
        version: str,
        default_output_dir: str | Path = "results",
        event_bus: IDomainEventPublisher | None = None,
    ):
        super().__init__(repository=None, event_bus=event_bus)
        self._version = version
        self._default_output_dir = Path(default_output_dir)
        self._writer: OutputWriter | None = None
        self._run: RunAggregate | None = None

    def execute(self, command: str, config: RunConfig, config_path: str | Path | None = None) -> Path:
        """
        Use case: Run one subcommand end to end.

        Args:
            command: Subcommand name (one of COMMANDS).
            config: Resolved configuration.
            config_path: Configuration file, digested into the manifest (optional).

        Returns:
            Path: Output directory.

        Raises:
            ConfigurationError: On an unknown command or schema violation.
            Exception: Whatever the command raised (after the failure event is published).
        """
        run = RunAggregate(command)
        run.record_input(config_path)
        self._run = run
        try:
            handler = self._handlers().get(command)
            if handler is None:
                raise ConfigurationError(f"unknown command '{command}' (expected one of: {', '.join(COMMANDS)})")
            output_dir = Path(config.get("output_dir") or self._default_output_dir / command)
            self._writer = OutputWriter(output_dir)

            handler(config)

            manifests = ManifestRepository(self._writer)
            seed_key = _MASTER_SEED_KEYS.get(command) or self._simulate_seed_key(command, config)
            manifest = RunManifest(
                command=command,
                config=config.to_dict(),
                input_digests=ManifestRepository.digests(run.inputs),
                output_digests=manifests.output_digests(),
                master_seed=config.get(seed_key) if seed_key else None,
                version=self._version,
                duration_seconds=run.elapsed(),
                preset_note=config.get("preset.note"),
                started_at=run.started_at,
            )
            manifests.save(manifest)
            run.complete(str(output_dir), len(self._writer.written), manifest.duration_seconds)
            return output_dir
        except Exception as error:
            run.fail(error, ExitCodeService.exit_code_for(error))
            raise
        finally:
            self.publish_events(run)
            self._writer = None
            self._run = None

    def _handlers(self) -> dict[str, Callable[[RunConfig], list[Path]]]:
        return {
            "simulate": self.cmd_simulate,
            "sweep": self.cmd_sweep,
            "targeting": self.cmd_targeting,
            "scenarios": self.cmd_scenarios,
            "calibrate-diffusion": self.cmd_calibrate_diffusion,
            "calibrate-intervention": self.cmd_calibrate_intervention,
            "qmf": self.cmd_qmf,
            "seed-select": self.cmd_seed_select,
        }

    @staticmethod
    def _simulate_seed_key(command: str, config: RunConfig) -> str | None:
        if command != "simulate":
            return None
        return "simulate.rng_seed" if int(config.get("simulate.runs")) == 1 else "simulate.master_seed"

    # ------------------------------------------------------------------ commands

    def cmd_simulate(self, config: RunConfig) -> list[Path]:
        """
        Use case: One cascade (runs = 1) or a Monte Carlo batch.

        Returns:
            list[Path]: activations.csv (single run), curve.csv, summary.json.
        """
        graph = self._load_graph(config)
        diffusion = self._diffusion(graph, config)
        params, plan = self._params(config), self._plan(config)
        seed_node = self._seed_node(graph, diffusion, config)
        outputs = SimulationOutputRepository(self._output())

        runs = int(config.get("simulate.runs"))
        if runs == 1:
            rng_seed = int(config.get("simulate.rng_seed"))
            result = diffusion.simulate(params, plan, seed_node, rng_seed=rng_seed)
            return outputs.save_single(graph, params, plan, result, rng_seed)

        master_seed = int(config.get("simulate.master_seed"))
        time_grid = None if config.get("simulate.time_grid") is None else config.grid("simulate.time_grid")
        summary = diffusion.monte_carlo(params, plan, seed_node, runs, master_seed, time_grid=time_grid)
        return outputs.save_monte_carlo(graph, params, plan, seed_node, summary, master_seed)

    def cmd_sweep(self, config: RunConfig) -> list[Path]:
        """
        Use case: Strength x contagiousness, strength x scale or strength x timing grid.

        Returns:
            list[Path]: sweep_<label>.csv, plus the critical curve when requested.
        """
        graph = self._load_graph(config)
        diffusion = self._diffusion(graph, config)
        params = self._params(config)
        seed_node = self._seed_node(graph, diffusion, config)
        experiments = ExperimentService(diffusion, event_bus=self.event_bus)

        kind = self._enum(InterventionKind, config, "sweep.kind")
        axis = config.get("sweep.axis")
        strategy = self._strategy(config.get("sweep.strategy"), "sweep.strategy")
        eps_grid = config.grid("sweep.eps_grid", ExperimentGridService.unit_grid())
        runs, master_seed = int(config.get("sweep.runs")), int(config.get("sweep.master_seed"))

        if axis == "eta":
            axis_grid = config.grid("sweep.axis_grid", ExperimentGridService.eta_grid())
            grid = experiments.sweep_strength_vs_contagiousness(
                kind,
                eps_grid,
                axis_grid,
                delay_rate=params.delay_rate,
                seed_node=seed_node,
                runs=runs,
                master_seed=master_seed,
                delta=float(config.get("sweep.delta")),
                phi=float(config.get("sweep.phi")),
                strategy=strategy,
            )
        else:
            expected = {"delta": InterventionKind.PREBUNK, "phi": InterventionKind.CONTEXTUALIZE}
            if axis not in expected or expected[axis] is not kind:
                raise ConfigurationError(
                    f"axis '{axis}' does not fit a {kind.value} sweep (eta for any kind, delta for prebunk, "
                    "phi for contextualize)",
                    path="sweep.axis",
                )
            axis_grid = config.grid("sweep.axis_grid", ExperimentGridService.unit_grid(ExperimentDefaults.SCALE_STEPS))
            grid = experiments.sweep_scale_or_timing(
                kind, eps_grid, axis_grid, params, seed_node, runs, master_seed, strategy=strategy
            )

        written = [ExperimentOutputRepository(self._output()).save_sweep(grid)]
        if config.get("sweep.critical_curve"):
            if axis != "eta" or kind is InterventionKind.CONTEXTUALIZE:
                logger.warning("No mean-field critical curve for a %s sweep over %s; skipped.", kind.value, axis)
            else:
                spec = CurveSpec(
                    intervention=kind,
                    vary="eta",
                    values=axis_grid,
                    delta=float(config.get("sweep.delta")) if kind is InterventionKind.PREBUNK else None,
                    strategy=strategy,
                    seed_node=seed_node,
                    bisect_tol=float(config.get("qmf.bisect_tol")),
                )
                written.extend(self._save_curves(config, graph, [spec]))
        return written

    def cmd_targeting(self, config: RunConfig) -> list[Path]:
        """
        Use case: Strategy differentials over (epsilon, delta).

        Returns:
            list[Path]: targeting.csv, plus one critical curve per strategy when requested.
        """
        graph = self._load_graph(config)
        diffusion = self._diffusion(graph, config)
        params = self._params(config)
        seed_node = self._seed_node(graph, diffusion, config)

        strategies = [self._strategy(name, "targeting.strategies") for name in config.get("targeting.strategies")]
        unit = ExperimentGridService.unit_grid(ExperimentDefaults.SCALE_STEPS)
        eps_grid = config.grid("targeting.eps_grid", unit)
        delta_grid = config.grid("targeting.delta_grid", unit)
        differentials = ExperimentService(diffusion, event_bus=self.event_bus).targeting_differentials(
            eps_grid,
            delta_grid,
            params,
            seed_node,
            runs=int(config.get("targeting.runs")),
            master_seed=int(config.get("targeting.master_seed")),
            strategies=strategies,
        )

        written = [ExperimentOutputRepository(self._output()).save_differentials(differentials)]
        if config.get("targeting.critical_curve"):
            specs = [
                CurveSpec(
                    intervention=InterventionKind.PREBUNK,
                    vary="delta",
                    values=delta_grid,
                    eta=params.eta,
                    strategy=differential.strategy,
                    seed_node=seed_node,
                    bisect_tol=float(config.get("qmf.bisect_tol")),
                )
                for differential in differentials
            ]
            written.extend(self._save_curves(config, graph, specs))
        return written

    def cmd_scenarios(self, config: RunConfig) -> list[Path]:
        """
        Use case: Single and combined interventions, relative to paired baseline runs.

        Returns:
            list[Path]: scenarios.csv and scenario_runs.csv.
        """
        graph = self._load_graph(config)
        diffusion = self._diffusion(graph, config)
        params = self._params(config)
        seed_node = self._seed_node(graph, diffusion, config)

        scenarios: list[Scenario] = []
        if config.get("scenarios.defaults"):
            scenarios.extend(
                ScenarioFactory.default_scenarios(
                    params,
                    strength_increment=float(config.get("scenarios.strength_increment")),
                    reach_increment=float(config.get("scenarios.reach_increment")),
                )
            )
        for index, item in enumerate(config.get("scenarios.items") or []):
            path = f"scenarios.items[{index}]"
            try:
                scenarios.append(Scenario.from_dict(item, params))
            except (KeyError, TypeError, ValueError) as error:
                raise ConfigurationError(f"invalid scenario: {error}", path=path) from error
        if not scenarios:
            raise ConfigurationError("no scenario requested (defaults disabled and no items)", path="scenarios")

        result = ExperimentService(diffusion, event_bus=self.event_bus).combined_scenarios(
            scenarios,
            seed_node,
            runs=int(config.get("scenarios.runs")),
            master_seed=int(config.get("scenarios.master_seed")),
        )
        return ExperimentOutputRepository(self._output()).save_scenarios(result)

    def cmd_calibrate_diffusion(self, config: RunConfig) -> list[Path]:
        """
        Use case: Fit (eta, lambda) to observed cascades.

        Returns:
            list[Path]: fit.json, loss_surface.csv, fit_curves.csv.
        """
        graph = self._load_graph(config)
        cascades = self._required_path(config, "calibration.cascades")
        fit = CalibrationService(workers=self._workers(config), event_bus=self.event_bus).calibrate_diffusion(
            graph,
            cascades,
            eta_grid=config.grid("calibration.eta_grid"),
            lambda_grid=config.grid("calibration.lambda_grid"),
            min_size=int(config.get("calibration.min_size")),
            within_hours=float(config.get("calibration.within_hours")),
            loss_window_hours=float(config.get("calibration.loss_window_hours")),
            runs_per_cell=int(config.get("calibration.runs_per_cell")),
            master_seed=int(config.get("calibration.master_seed")),
            count_root=bool(config.get("calibration.count_root")),
        )
        logger.info("Fitted eta=%.4f lambda=%.3f (loss %.4g)", fit.eta_hat, fit.lambda_hat, fit.loss)
        return CalibrationOutputRepository(self._output()).save_fit(fit, graph)

    def cmd_calibrate_intervention(self, config: RunConfig) -> list[Path]:
        """
        Use case: Mean suppression rate from survey responses.

        Returns:
            list[Path]: strength.json and strength_items.csv.
        """
        survey = self._required_path(config, "calibration.survey")
        estimate = CalibrationService(event_bus=self.event_bus).calibrate_intervention(
            survey, control_floor=float(config.get("calibration.control_floor"))
        )
        logger.info(
            "Mean suppression rate %.4f over %d item(s) (%d excluded)",
            estimate.mean_epsilon,
            len(estimate.per_item),
            len(estimate.excluded_items),
        )
        return CalibrationOutputRepository(self._output()).save_strength(estimate)

    def cmd_qmf(self, config: RunConfig) -> list[Path]:
        """
        Use case: Spectral radius at eta and the requested critical curves.

        Returns:
            list[Path]: spectral.json and one CSV per curve.
        """
        graph = self._load_graph(config)
        eta = config.get("qmf.eta")
        eta = float(config.get("params.eta") if eta is None else eta)
        qmf = self._qmf(config)
        report = qmf.spectral_radius(graph, eta)
        base_radius = report.spectral_radius / eta if eta > 0.0 else CriticalConditionService.base_radius(graph)
        written = [QMFOutputRepository(self._output()).save_report(report, eta, base_radius)]

        specs = [self._curve_spec(graph, config, index, item) for index, item in enumerate(config.get("qmf.curves"))]
        if specs:
            written.extend(self._save_curves(config, graph, specs))
        return written

    def cmd_seed_select(self, config: RunConfig) -> list[Path]:
        """
        Use case: Pick and record the diffusion seed.

        Returns:
            list[Path]: seed.json.
        """
        graph = self._load_graph(config)
        diffusion = self._diffusion(graph, config)
        seed_node = diffusion.select_seed(relax=bool(config.get("seed.relax")))
        payload = {
            "external_id": graph.id_map.to_external(seed_node),
            "internal_index": seed_node,
            "out_degree": int(graph.out_degrees()[seed_node]),
            "susceptibility": float(graph.susceptibility[seed_node]),
            "relaxed": bool(config.get("seed.relax")),
        }
        return [self._output().write_json("seed.json", payload)]

    # ------------------------------------------------------------------ helpers

    def _output(self) -> OutputWriter:
        if self._writer is None:
            raise RuntimeError("Commands write outputs only inside execute().")
        return self._writer

    def _record_input(self, path) -> None:
        if self._run is not None:
            self._run.record_input(path)

    @staticmethod
    def _workers(config: RunConfig) -> int:
        workers = config.get("workers")
        if workers is None:
            return os.cpu_count() or 1
        if not isinstance(workers, int) or workers < 1:
            raise ConfigurationError(f"must be a positive integer, got {workers!r}", path="workers")
        return workers

    def _load_graph(self, config: RunConfig) -> DirectedGraph:
        """Synthetic network or prepared edge list."""
        synthetic = config.get("graph.synthetic")
        if synthetic:
            if not isinstance(synthetic, dict):
                raise ConfigurationError("expected a mapping", path="graph.synthetic")
            try:
                graph = SyntheticNetworkService.synthetic_scale_free_network(**synthetic)
            except TypeError as error:
                raise ConfigurationError(str(error), path="graph.synthetic") from error
            logger.info("Synthetic scale-free network: %d nodes, %d edges", graph.node_count, graph.edge_count)
            return graph

        edge_list = self._required_path(config, "graph.edge_list")
        for key in ("graph.susceptibility", "graph.bootstrap_from"):
            self._record_input(config.get(key))
        return NetworkService(event_bus=self.event_bus).prepare_network(
            edge_list,
            susceptibility=config.get("graph.susceptibility"),
            bootstrap_from=config.get("graph.bootstrap_from"),
            bootstrap_seed=int(config.get("graph.bootstrap_seed")),
            largest_component=bool(config.get("graph.largest_component")),
            id_map_out=config.get("graph.id_map_out"),
        )

    def _required_path(self, config: RunConfig, key: str) -> str:
        value = config.get(key)
        if not value:
            raise ConfigurationError("a file path is required", path=key)
        self._record_input(value)
        return str(value)

    def _diffusion(self, graph: DirectedGraph, config: RunConfig) -> DiffusionService:
        return DiffusionService(
            graph,
            evaluation=self._enum(SuccessEvaluation, config, "engine.evaluation"),
            workers=self._workers(config),
            ctx_runs=int(config.get("engine.ctx_runs")),
            ctx_resolution=float(config.get("engine.ctx_resolution")),
            event_bus=self.event_bus,
        )

    def _qmf(self, config: RunConfig) -> QMFService:
        return QMFService(
            tol=float(config.get("qmf.tol")),
            max_iter=int(config.get("qmf.max_iter")),
            require_convergence=bool(config.get("qmf.require_convergence")),
            event_bus=self.event_bus,
        )

    def _save_curves(self, config: RunConfig, graph: DirectedGraph, specs: list[CurveSpec]) -> list[Path]:
        outputs = QMFOutputRepository(self._output())
        return [outputs.save_curve(curve) for curve in self._qmf(config).curves(graph, specs)]

    @staticmethod
    def _params(config: RunConfig) -> DiffusionParams:
        return DiffusionParams.from_dict(config.section("params"))

    @staticmethod
    def _plan(config: RunConfig) -> InterventionPlan:
        try:
            return InterventionPlan.from_dict(config.get("plan"))
        except (TypeError, InvalidParameterError) as error:
            raise ConfigurationError(str(error), path="plan") from error

    @staticmethod
    def _enum(enum_type, config: RunConfig, key: str):
        value = config.get(key)
        try:
            return enum_type(value)
        except ValueError as error:
            choices = ", ".join(member.value for member in enum_type)
            raise ConfigurationError(f"'{value}' is not one of: {choices}", path=key) from error

    @staticmethod
    def _strategy(value, key: str) -> TargetStrategy:
        try:
            return TargetStrategy.parse(value)
        except ValueError as error:
            raise ConfigurationError(str(error), path=key) from error

    @staticmethod
    def _seed_node(graph: DirectedGraph, diffusion: DiffusionService, config: RunConfig) -> int:
        """Configured seed (external id) or the selected one."""
        node = config.get("seed.node")
        if node is None:
            return diffusion.select_seed(relax=bool(config.get("seed.relax")))
        if str(node) not in graph.id_map:
            raise ConfigurationError(f"node '{node}' is not in the graph", path="seed.node")
        return graph.id_map.to_internal(str(node))

    def _curve_spec(self, graph: DirectedGraph, config: RunConfig, index: int, item) -> CurveSpec:
        """Curve request from one `qmf.curves` entry."""
        path = f"qmf.curves[{index}]"
        if not isinstance(item, dict):
            raise ConfigurationError("expected a mapping", path=path)
        entry = dict(item)
        values = parse_grid(entry.pop("values", None), f"{path}.values")
        seed = entry.pop("seed_node", config.get("seed.node"))
        seed_node = None
        if seed is not None:
            if str(seed) not in graph.id_map:
                raise ConfigurationError(f"node '{seed}' is not in the graph", path=f"{path}.seed_node")
            seed_node = graph.id_map.to_internal(str(seed))
        elif TargetStrategy.parse(entry.get("strategy", "random")) is TargetStrategy.DISTANCE:
            seed_node = self._diffusion(graph, config).select_seed(relax=bool(config.get("seed.relax")))
        entry.setdefault("bisect_tol", float(config.get("qmf.bisect_tol")))
        try:
            return CurveSpec(values=values, seed_node=seed_node, **entry)
        except (TypeError, ValueError) as error:
            raise ConfigurationError(str(error), path=path) from error
