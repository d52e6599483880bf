"""
src.qmf.domain.value_objects - QMF Domain Value Objects module.
"""

from .critical_curve import CriticalCurve, CurveSpec
from .spectral_report import SpectralReport

__all__ = [
    "CriticalCurve",
    "CurveSpec",
    "SpectralReport",
]
