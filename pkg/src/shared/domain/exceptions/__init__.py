"""
src.shared.domain.exceptions - Shared Kernel Domain Exceptions module.
"""

from .cascade_data_exception import CascadeDataError
from .graph_format_exception import GraphFormatError
from .invalid_parameter_exception import InvalidParameterError
from .survey_data_exception import SurveyDataError
from .configuration_exception import ConfigurationError, UnknownPresetError
from .seed_selection_exception import NoFullySusceptibleNodeError
from .spectral_convergence_exception import SpectralConvergenceError

__all__ = [
    "CascadeDataError",
    "ConfigurationError",
    "GraphFormatError",
    "InvalidParameterError",
    "NoFullySusceptibleNodeError",
    "SpectralConvergenceError",
    "SurveyDataError",
    "UnknownPresetError",
]
