"""
Domain Service for experiment grids and paired statistics.
"""

import numpy as np

from src.shared.domain.constants import ExperimentDefaults
from src.shared.domain.exceptions import InvalidParameterError


class ExperimentGridService:
    """
    Domain Service: Default grids and paired Monte Carlo statistics.
    """

    @staticmethod
    def unit_grid(steps: int = ExperimentDefaults.EPSILON_STEPS) -> tuple[float, ...]:
        """`steps` evenly spaced values over [0, 1]."""
        if steps < 2:
            raise InvalidParameterError("A unit grid needs at least two steps.")
        return tuple(float(value) for value in np.linspace(0.0, 1.0, steps))

    @staticmethod
    def eta_grid(
        steps: int = ExperimentDefaults.ETA_STEPS,
        low: float = ExperimentDefaults.ETA_MIN,
        high: float = ExperimentDefaults.ETA_MAX,
    ) -> tuple[float, ...]:
        """Log-spaced contagiousness values over [low, high]."""
        if not 0.0 < low < high <= 1.0:
            raise InvalidParameterError("The eta grid needs 0 < low < high <= 1.")
        return tuple(float(value) for value in np.geomspace(low, high, steps))

    @staticmethod
    def require_sorted(name: str, values) -> tuple[float, ...]:
        """Validate a nonempty ascending grid."""
        values = tuple(float(value) for value in values)
        if not values or any(b < a for a, b in zip(values, values[1:])):
            raise InvalidParameterError(f"{name} must be a nonempty ascending grid.")
        return values

    @staticmethod
    def paired_standard_error(first: np.ndarray, second: np.ndarray) -> float:
        """
        Standard error of the mean per-run difference first - second.

        Args:
            first: Per-run values.
            second: Per-run values paired by run index.

        Returns:
            float: Sample standard deviation of the differences over sqrt(runs) (0 for one run).
        """
        differences = np.asarray(first, dtype=float) - np.asarray(second, dtype=float)
        if len(differences) < 2:
            return 0.0
        return float(np.std(differences, ddof=1) / np.sqrt(len(differences)))
