"""
Calibration Infrastructure - Cascade CSV repository.

Format: header "cascade_id,node_id,timestamp_hours", one row per sharing event.
"""

import numpy as np
import pandas as pd

from src.shared.domain.exceptions import CascadeDataError
from src.shared.infrastructure import get_logger
from src.shared.infrastructure.repositories import CSVRepository
from src.calibration.domain.value_objects import CascadeRecord

logger = get_logger(__name__)

CASCADE_COLUMNS = ["cascade_id", "node_id", "timestamp_hours"]


class CascadeCsvRepository(CSVRepository):
    """
    Repository reading cascades from CSV.
    """

    def load(self) -> list[CascadeRecord]:
        """
        Read every cascade, events sorted by timestamp.

        Returns:
            list[CascadeRecord]: Cascades in order of first appearance.

        Raises:
            CascadeDataError: On a missing column or a bad timestamp (names the row).
        """
        df = self._load_csv(dtype=str)
        self._require_columns(df, CASCADE_COLUMNS, error=CascadeDataError)

        times = pd.to_numeric(df["timestamp_hours"], errors="coerce").to_numpy(dtype=float)
        invalid = ~np.isfinite(times) | (times < 0.0) | df["cascade_id"].isna().to_numpy()
        if invalid.any():
            row = int(np.flatnonzero(invalid)[0])
            raise CascadeDataError(
                f"{self._file_path}: row {row + 2} has an invalid cascade id or timestamp "
                f"'{df['timestamp_hours'].iloc[row]}'."
            )
        df = df.assign(timestamp_hours=times)

        cascades = []
        for cascade_id, group in df.groupby("cascade_id", sort=False):
            events = group.sort_values("timestamp_hours", kind="stable")
            cascades.append(
                CascadeRecord(
                    cascade_id=str(cascade_id),
                    node_ids=tuple(events["node_id"].astype(str)),
                    timestamps=events["timestamp_hours"].to_numpy(),
                )
            )
        logger.info("Loaded %d cascade(s) with %d event(s) from %s", len(cascades), len(df), self._file_path)
        return cascades
