"""
src.calibration.domain.value_objects - Calibration Domain Value Objects module.
"""

from .cascade_record import CascadeRecord
from .fit_result import FitResult, StrengthEstimate
from .survey_record import SurveyRecord

__all__ = [
    "CascadeRecord",
    "FitResult",
    "StrengthEstimate",
    "SurveyRecord",
]
