"""
Calibration Infrastructure - Fit and strength output files.
"""

from pathlib import Path

from src.shared.infrastructure.repositories import OutputWriter
from src.calibration.domain.value_objects import FitResult, StrengthEstimate
from src.graph.domain.entities import DirectedGraph


class CalibrationOutputRepository:
    """
    Repository writing calibration results.

    - fit.json, loss_surface.csv, fit_curves.csv
    - strength.json, strength_items.csv
    """

    def __init__(self, writer: OutputWriter):
        self._writer = writer

    def save_fit(self, fit: FitResult, graph: DirectedGraph) -> list[Path]:
        payload = {**fit.to_dict(), "seed_node": graph.id_map.to_external(fit.seed_node)}
        return [
            self._writer.write_json("fit.json", payload),
            self._writer.write_csv("loss_surface.csv", fit.loss_surface),
            self._writer.write_csv("fit_curves.csv", fit.curves_frame()),
        ]

    def save_strength(self, estimate: StrengthEstimate) -> list[Path]:
        return [
            self._writer.write_json("strength.json", estimate.to_dict()),
            self._writer.write_csv("strength_items.csv", estimate.per_item),
        ]
