"""
Experiments Infrastructure - Named run-configuration presets.

Desk presets run on a synthetic scale-free network and finish on a laptop;
full presets expect the prepared datasets below the dataset folder.
"""

import copy
from pathlib import Path

from src.shared.domain.constants import ExperimentDefaults, PaperEstimates
from src.shared.domain.exceptions import UnknownPresetError

PRESET_NOTE = "Grid resolution and run budget are project choices, not measured values."

_DATASET_FILES = {
    "edge_list": "nikolov_edges.txt",
    "susceptibility": "nikolov_susceptibility.txt",
}


def _unit(steps: int) -> dict:
    return {"start": 0.0, "stop": 1.0, "steps": steps}


def _eta(steps: int) -> dict:
    return {"start": ExperimentDefaults.ETA_MIN, "stop": ExperimentDefaults.ETA_MAX, "steps": steps, "spacing": "log"}


def _scale(full: bool) -> dict:
    """Run budget and grid sizes of one scale."""
    if full:
        return {
            "runs": ExperimentDefaults.FULL_RUNS_PER_CELL,
            "targeting_runs": ExperimentDefaults.FULL_RUNS_PER_CELL,
            "eps": ExperimentDefaults.FULL_EPSILON_STEPS,
            "eta": ExperimentDefaults.FULL_ETA_STEPS,
            "axis": ExperimentDefaults.FULL_SCALE_STEPS,
        }
    return {
        "runs": ExperimentDefaults.RUNS_PER_CELL,
        "targeting_runs": ExperimentDefaults.TARGETING_RUNS_PER_CELL,
        "eps": ExperimentDefaults.EPSILON_STEPS,
        "eta": ExperimentDefaults.ETA_STEPS,
        "axis": ExperimentDefaults.SCALE_STEPS,
    }


class ExperimentPresetRepository:
    """
    Repository of the named experiment presets.

    Every preset is a complete run configuration (see docs/CONFIG.md).
    """

    _SWEEPS = {
        "fig3-nudge": {"kind": "nudge", "axis": "eta"},
        "fig3-prebunk": {"kind": "prebunk", "axis": "eta"},
        "fig3-context": {"kind": "contextualize", "axis": "eta"},
        "fig4-prebunk": {"kind": "prebunk", "axis": "delta"},
        "fig4-context": {"kind": "contextualize", "axis": "phi"},
    }

    def __init__(self, dataset_folder: str | Path = "data"):
        self._dataset_folder = Path(dataset_folder)

    def names(self) -> list[str]:
        """All preset names, sorted."""
        stems = [*self._SWEEPS, "fig5-targeting", "fig6-scenarios"]
        return sorted(f"paper-{stem}-{scale}" for stem in stems for scale in ("desk", "full"))

    def load(self, name: str) -> dict:
        """
        Build the configuration of a preset.

        Args:
            name: Preset name.

        Returns:
            dict: Run configuration (a fresh copy).

        Raises:
            UnknownPresetError: If no preset has this name.
        """
        if name not in self.names():
            raise UnknownPresetError(name, self.names())
        stem, scale_name = name.removeprefix("paper-").rsplit("-", 1)
        full = scale_name == "full"
        scale = _scale(full)

        config = {
            "preset": {"name": name, "note": PRESET_NOTE},
            "graph": self._graph(full),
            "seed": {"relax": False},
            "params": {"eta": PaperEstimates.ETA, "lambda": PaperEstimates.LAMBDA},
        }

        if stem in self._SWEEPS:
            axis = self._SWEEPS[stem]["axis"]
            config["command"] = "sweep"
            config["sweep"] = {
                **self._SWEEPS[stem],
                "eps_grid": _unit(scale["eps"]),
                "axis_grid": _eta(scale["eta"]) if axis == "eta" else _unit(scale["axis"]),
                "delta": PaperEstimates.DELTA_PREBUNK,
                "phi": PaperEstimates.PHI_CONTEXT,
                "strategy": "random",
                "runs": scale["runs"],
                "critical_curve": axis == "eta" and self._SWEEPS[stem]["kind"] != "contextualize",
            }
        elif stem == "fig5-targeting":
            config["command"] = "targeting"
            config["targeting"] = {
                "eps_grid": _unit(scale["axis"]),
                "delta_grid": _unit(scale["axis"]),
                "strategies": ["random", "degree", "susceptibility", "distance"],
                "runs": scale["targeting_runs"],
                "critical_curve": True,
            }
        else:
            config["command"] = "scenarios"
            config["scenarios"] = {
                "defaults": True,
                "strength_increment": PaperEstimates.STRENGTH_INCREMENT,
                "reach_increment": PaperEstimates.REACH_INCREMENT,
                "runs": scale["runs"],
            }
        return copy.deepcopy(config)

    def _graph(self, full: bool) -> dict:
        if full:
            return {
                "edge_list": str(self._dataset_folder / _DATASET_FILES["edge_list"]),
                "susceptibility": str(self._dataset_folder / _DATASET_FILES["susceptibility"]),
                "largest_component": True,
            }
        return {
            "synthetic": {
                "node_count": ExperimentDefaults.NETWORK_NODES,
                "attachment": ExperimentDefaults.NETWORK_ATTACHMENT,
                "seed": 1,
                "susceptibility": "scored",
                "shuffle_ids": True,
            }
        }
