"""
src.calibration.infrastructure.repositories - Calibration Infrastructure Repositories module.
"""

from .calibration_output_repository import CalibrationOutputRepository
from .cascade_csv_repository import CASCADE_COLUMNS, CascadeCsvRepository
from .survey_csv_repository import SurveyCsvRepository

__all__ = [
    "CASCADE_COLUMNS",
    "CalibrationOutputRepository",
    "CascadeCsvRepository",
    "SurveyCsvRepository",
]
