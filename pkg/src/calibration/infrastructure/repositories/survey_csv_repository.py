"""
Calibration Infrastructure - Survey CSV repository.

Format: header "item_id,participant_id,condition,response,scale_min,scale_max"
with condition in {control, treatment}; an optional "study_id" column groups
items by study.
"""

import numpy as np
import pandas as pd

from src.shared.domain.enums import SurveyCondition
from src.shared.domain.exceptions import SurveyDataError
from src.shared.infrastructure import get_logger
from src.shared.infrastructure.repositories import CSVRepository
from src.calibration.domain.services import SURVEY_COLUMNS

logger = get_logger(__name__)


class SurveyCsvRepository(CSVRepository):
    """
    Repository reading and validating survey responses.
    """

    def _fail(self, df: pd.DataFrame, mask: np.ndarray, problem: str):
        row = int(np.flatnonzero(mask)[0])
        raise SurveyDataError(
            f"{self._file_path}: row {row + 2} (item '{df['item_id'].iloc[row]}', "
            f"participant '{df['participant_id'].iloc[row]}'): {problem}."
        )

    def load(self) -> pd.DataFrame:
        """
        Read the survey table.

        Returns:
            pd.DataFrame: Validated responses (numeric columns as float, condition lower-case).

        Raises:
            SurveyDataError: On a missing column or an invalid row (names the row).
        """
        df = self._load_csv(dtype=str)
        self._require_columns(df, SURVEY_COLUMNS)

        conditions = df["condition"].astype(str).str.strip().str.lower()
        valid = {condition.value for condition in SurveyCondition}
        bad_condition = ~conditions.isin(valid).to_numpy()
        if bad_condition.any():
            row = int(np.flatnonzero(bad_condition)[0])
            self._fail(df, bad_condition, f"condition '{df['condition'].iloc[row]}' is not one of {sorted(valid)}")
        df["condition"] = conditions

        for column in ("response", "scale_min", "scale_max"):
            values = pd.to_numeric(df[column], errors="coerce")
            not_numeric = values.isna().to_numpy()
            if not_numeric.any():
                self._fail(df, not_numeric, f"{column} is not a number")
            df[column] = values.astype(float)

        bad_scale = (df["scale_max"] <= df["scale_min"]).to_numpy()
        if bad_scale.any():
            self._fail(df, bad_scale, "scale_max must exceed scale_min")
        out_of_range = ((df["response"] < df["scale_min"]) | (df["response"] > df["scale_max"])).to_numpy()
        if out_of_range.any():
            self._fail(df, out_of_range, "response outside [scale_min, scale_max]")

        logger.info("Loaded %d survey response(s) on %d item(s)", len(df), df["item_id"].nunique())
        return df
