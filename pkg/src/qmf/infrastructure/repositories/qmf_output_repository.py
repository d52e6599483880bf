"""
QMF Infrastructure - Spectral report and critical curve files.
"""

from pathlib import Path

from src.shared.infrastructure.repositories import OutputWriter
from src.qmf.domain.value_objects import CriticalCurve, SpectralReport


class QMFOutputRepository:
    """
    Repository writing spectral.json and one CSV per critical curve
    (axis_value, critical_epsilon; empty field where absent).
    """

    def __init__(self, writer: OutputWriter):
        self._writer = writer

    def save_report(self, report: SpectralReport, eta: float, base_radius: float) -> Path:
        """Write the spectral report with the base radius Lambda_0."""
        payload = {"eta": eta, "base_radius": base_radius, **report.to_dict()}
        return self._writer.write_json("spectral.json", payload)

    def save_curve(self, curve: CriticalCurve) -> Path:
        """Write `critical_<label>_<axis>.csv`."""
        return self._writer.write_csv(f"critical_{curve.label}_{curve.axis_name}.csv", curve.to_frame())
