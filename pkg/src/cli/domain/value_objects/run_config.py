"""
CLI Domain Value Object - Run Configuration.

Schema of the JSON run configuration (documented in docs/CONFIG.md). Keys
listed in FREE_FORM_KEYS hold nested documents validated by the value
objects that consume them (intervention plans, scenarios, curve requests,
synthetic network options). Grid keys take either a list or a
{start, stop, steps} mapping and are checked by `parse_grid` when read.
"""

import copy
from dataclasses import dataclass, field

import numpy as np

from src.shared.domain.constants import (
    CalibrationDefaults,
    ExperimentDefaults,
    PaperEstimates,
    SimulationDefaults,
    SpectralDefaults,
)
from src.shared.domain.exceptions import ConfigurationError

DEFAULT_RUN_CONFIG: dict = {
    "command": None,
    "output_dir": None,
    "workers": None,
    "preset": {"name": None, "note": None},
    "graph": {
        "edge_list": None,
        "susceptibility": None,
        "bootstrap_from": None,
        "bootstrap_seed": 0,
        "largest_component": True,
        "id_map_out": None,
        "synthetic": None,
    },
    "seed": {"node": None, "relax": False},
    "params": {"eta": PaperEstimates.ETA, "lambda": PaperEstimates.LAMBDA},
    "plan": {},
    "engine": {
        "evaluation": "delivery",
        "ctx_runs": SimulationDefaults.CTX_TIME_RUNS,
        "ctx_resolution": SimulationDefaults.CTX_TIME_RESOLUTION_HOURS,
    },
    "simulate": {
        "rng_seed": 0,
        "runs": 1,
        "master_seed": 0,
        "time_grid": None,
    },
    "sweep": {
        "kind": "nudge",
        "axis": "eta",
        "eps_grid": None,
        "axis_grid": None,
        "delta": PaperEstimates.DELTA_PREBUNK,
        "phi": PaperEstimates.PHI_CONTEXT,
        "strategy": "random",
        "runs": ExperimentDefaults.RUNS_PER_CELL,
        "master_seed": 0,
        "critical_curve": False,
    },
    "targeting": {
        "eps_grid": None,
        "delta_grid": None,
        "strategies": ["random", "degree", "susceptibility", "distance"],
        "runs": ExperimentDefaults.RUNS_PER_CELL,
        "master_seed": 0,
        "critical_curve": False,
    },
    "scenarios": {
        "defaults": True,
        "items": [],
        "strength_increment": PaperEstimates.STRENGTH_INCREMENT,
        "reach_increment": PaperEstimates.REACH_INCREMENT,
        "runs": ExperimentDefaults.RUNS_PER_CELL,
        "master_seed": 0,
    },
    "calibration": {
        "cascades": None,
        "survey": None,
        "eta_grid": list(CalibrationDefaults.ETA_GRID),
        "lambda_grid": list(CalibrationDefaults.LAMBDA_GRID),
        "min_size": CalibrationDefaults.MIN_CASCADE_SIZE,
        "within_hours": CalibrationDefaults.CASCADE_WINDOW_HOURS,
        "loss_window_hours": CalibrationDefaults.LOSS_WINDOW_HOURS,
        "runs_per_cell": CalibrationDefaults.RUNS_PER_CELL,
        "master_seed": 0,
        "count_root": True,
        "control_floor": CalibrationDefaults.CONTROL_FLOOR,
    },
    "qmf": {
        "eta": None,
        "tol": SpectralDefaults.TOLERANCE,
        "max_iter": SpectralDefaults.MAX_ITERATIONS,
        "require_convergence": False,
        "bisect_tol": SpectralDefaults.BISECTION_TOLERANCE,
        "curves": [],
    },
}

GRID_KEYS = frozenset(
    {
        "simulate.time_grid",
        "sweep.eps_grid",
        "sweep.axis_grid",
        "targeting.eps_grid",
        "targeting.delta_grid",
        "calibration.eta_grid",
        "calibration.lambda_grid",
    }
)

FREE_FORM_KEYS = frozenset({"plan", "graph.synthetic", "scenarios.items", "qmf.curves"}) | GRID_KEYS


@dataclass(frozen=True)
class RunConfig:
    """
    Value Object: A resolved run configuration.

    `data` always has the full shape of DEFAULT_RUN_CONFIG.
    """

    data: dict = field(default_factory=lambda: copy.deepcopy(DEFAULT_RUN_CONFIG))

    def get(self, path: str):
        """
        Value at a dotted path.

        Raises:
            ConfigurationError: If the path does not exist.
        """
        node = self.data
        for part in path.split("."):
            if not isinstance(node, dict) or part not in node:
                raise ConfigurationError("unknown key", path=path)
            node = node[part]
        return node

    def section(self, name: str) -> dict:
        return copy.deepcopy(self.get(name))

    def to_dict(self) -> dict:
        return copy.deepcopy(self.data)

    def grid(self, path: str, default=None) -> tuple[float, ...]:
        """Numeric grid at a dotted path (see `parse_grid`)."""
        return parse_grid(self.get(path), path, default)


def parse_grid(value, path: str, default=None) -> tuple[float, ...]:
    """
    Read a numeric grid.

    Accepts a list of numbers, or {"start", "stop", "steps", "spacing": "linear" | "log"}.
    A null value yields `default`.

    Args:
        value: Configured value.
        path: Dotted path of the value (for messages).
        default: Grid used when the value is null.

    Returns:
        tuple[float, ...]: Grid values.

    Raises:
        ConfigurationError: On any other shape.
    """
    if value is None:
        if default is None:
            raise ConfigurationError("a grid is required", path=path)
        return tuple(float(item) for item in default)
    if isinstance(value, list):
        try:
            return tuple(float(item) for item in value)
        except (TypeError, ValueError) as error:
            raise ConfigurationError("grid values must be numbers", path=path) from error
    if not isinstance(value, dict):
        raise ConfigurationError("grid must be a list or a {start, stop, steps} mapping", path=path)

    unknown = set(value) - {"start", "stop", "steps", "spacing"}
    if unknown:
        raise ConfigurationError(f"unknown grid key(s) {', '.join(sorted(unknown))}", path=path)
    try:
        start, stop, steps = float(value["start"]), float(value["stop"]), int(value["steps"])
    except (KeyError, TypeError, ValueError) as error:
        raise ConfigurationError("grid needs numeric start, stop and steps", path=path) from error
    if steps < 1:
        raise ConfigurationError("grid needs at least one step", path=path)

    spacing = value.get("spacing", "linear")
    if spacing == "linear":
        return tuple(float(item) for item in np.linspace(start, stop, steps))
    if spacing == "log":
        if start <= 0.0 or stop <= 0.0:
            raise ConfigurationError("a log grid needs positive bounds", path=path)
        return tuple(float(item) for item in np.geomspace(start, stop, steps))
    raise ConfigurationError(f"unknown grid spacing '{spacing}'", path=path)
