"""
Calibration Domain Value Object - Cascade Record.
"""

from dataclasses import dataclass

import numpy as np

from src.shared.domain.exceptions import CascadeDataError


@dataclass(frozen=True, eq=False)
class CascadeRecord:
    """
    Value Object: One observed sharing cascade.

    Events are sorted by timestamp (hours); the earliest event is the root.

    Invariants:
    - at least one event
    - timestamps non-negative and non-decreasing
    """

    cascade_id: str
    node_ids: tuple[str, ...]
    timestamps: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.timestamps, dtype=float)
        if len(times) == 0:
            raise CascadeDataError(f"Cascade '{self.cascade_id}' has no events.")
        if len(times) != len(self.node_ids):
            raise CascadeDataError(f"Cascade '{self.cascade_id}': node and timestamp counts differ.")
        if np.any(~np.isfinite(times)) or np.any(times < 0.0):
            raise CascadeDataError(f"Cascade '{self.cascade_id}': timestamps must be non-negative numbers.")
        if np.any(np.diff(times) < 0.0):
            raise CascadeDataError(f"Cascade '{self.cascade_id}': timestamps must be non-decreasing.")
        times.setflags(write=False)
        object.__setattr__(self, "timestamps", times)

    @property
    def size(self) -> int:
        return len(self.timestamps)

    @property
    def offsets(self) -> np.ndarray:
        """Event times relative to the root."""
        return self.timestamps - self.timestamps[0]

    def size_within(self, hours: float) -> int:
        """Events at most `hours` after the root (root included)."""
        return int(np.searchsorted(self.offsets, hours, side="right"))

    def count_at(self, time_grid, count_root: bool = True) -> np.ndarray:
        """
        Cumulative event count at each grid time, measured from the root.

        Args:
            time_grid: Sorted times in hours.
            count_root: Count the root as event 1 at time 0.

        Returns:
            np.ndarray: Counts per grid time.
        """
        counts = np.searchsorted(self.offsets, np.asarray(time_grid, dtype=float), side="right")
        return counts if count_root else np.maximum(counts - 1, 0)
