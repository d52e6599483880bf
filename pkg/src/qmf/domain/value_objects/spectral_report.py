"""
QMF Domain Value Object - Spectral Report.
"""

from dataclasses import dataclass

from src.shared.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class SpectralReport:
    """
    Value Object: Result of a power-iteration spectral radius computation.

    `residual` is the relative residual of the best estimate; `iterations`
    counts matrix-vector products over all examined blocks (0 for acyclic
    graphs, whose radius is exactly 0).
    """

    spectral_radius: float
    iterations: int
    converged: bool
    residual: float
    tolerance: float

    def __post_init__(self):
        if self.spectral_radius < 0.0 or self.residual < 0.0:
            raise InvalidParameterError("Spectral radius and residual must be non-negative.")
        if self.converged and self.residual > self.tolerance:
            raise InvalidParameterError("A converged report must have residual within tolerance.")

    @property
    def supercritical(self) -> bool:
        """True when the spreading process grows under the mean-field condition."""
        return self.spectral_radius > 1.0

    def to_dict(self) -> dict:
        return {
            "spectral_radius": self.spectral_radius,
            "iterations": self.iterations,
            "converged": self.converged,
            "residual": self.residual,
            "tolerance": self.tolerance,
        }
