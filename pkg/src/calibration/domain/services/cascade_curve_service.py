"""
Domain Service for empirical cascade curves.
"""

import numpy as np

from src.shared.domain.exceptions import InvalidParameterError
from src.calibration.domain.value_objects import CascadeRecord


class CascadeCurveService:
    """
    Domain Service: Cascade filtering and average cumulative counts.
    """

    @staticmethod
    def filter_cascades(cascades: list[CascadeRecord], min_size: int, within_hours: float) -> list[CascadeRecord]:
        """
        Keep cascades reaching `min_size` events within `within_hours` of their root.

        Args:
            cascades: Candidate cascades.
            min_size: Minimum event count (root included).
            within_hours: Window after the root.

        Returns:
            list[CascadeRecord]: Retained cascades in input order.
        """
        return [cascade for cascade in cascades if cascade.size_within(within_hours) >= min_size]

    @staticmethod
    def empirical_mean_curve(cascades: list[CascadeRecord], time_grid, count_root: bool = True) -> np.ndarray:
        """
        Mean cumulative event count at each grid time.

        Args:
            cascades: Cascades to average.
            time_grid: Sorted times in hours from each root.
            count_root: Count the root as event 1.

        Returns:
            np.ndarray: Mean counts, non-decreasing along the grid.

        Raises:
            InvalidParameterError: On an empty cascade list or an unsorted grid.
        """
        if not cascades:
            raise InvalidParameterError("Cannot average an empty cascade list.")
        grid = np.asarray(time_grid, dtype=float)
        if np.any(np.diff(grid) < 0):
            raise InvalidParameterError("time_grid must be sorted.")
        return np.mean([cascade.count_at(grid, count_root) for cascade in cascades], axis=0)
