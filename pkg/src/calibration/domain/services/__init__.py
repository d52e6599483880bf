"""
src.calibration.domain.services - Calibration Domain Services module.
"""

from .cascade_curve_service import CascadeCurveService
from .diffusion_fit_service import DiffusionFitService, loss_grid
from .strength_estimation_service import SURVEY_COLUMNS, StrengthEstimationService, records_to_frame

__all__ = [
    "CascadeCurveService",
    "DiffusionFitService",
    "SURVEY_COLUMNS",
    "StrengthEstimationService",
    "loss_grid",
    "records_to_frame",
]
