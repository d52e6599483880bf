"""
src.calibration.application.services - Calibration Application Services module.
"""

from .calibration_service import CalibrationService

__all__ = [
    "CalibrationService",
]
