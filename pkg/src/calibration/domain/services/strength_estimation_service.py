"""
Domain Service - Intervention strength from randomized surveys.

e(a) = (zbar0(a) - zbar1(a)) / zbar0(a) on responses rescaled to [0, 1];
items whose control mean falls below the floor are excluded.
"""

import numpy as np
import pandas as pd

from src.shared.domain.constants import CalibrationDefaults
from src.shared.domain.enums import SurveyCondition
from src.shared.domain.exceptions import SurveyDataError
from src.shared.infrastructure import get_logger
from src.calibration.domain.value_objects import StrengthEstimate, SurveyRecord

logger = get_logger(__name__)

SURVEY_COLUMNS = ["item_id", "participant_id", "condition", "response", "scale_min", "scale_max"]


def records_to_frame(records: list[SurveyRecord]) -> pd.DataFrame:
    """Survey records as a table with the file columns (plus study_id)."""
    return pd.DataFrame([record.to_dict() for record in records], columns=SURVEY_COLUMNS + ["study_id"])


class StrengthEstimationService:
    """
    Domain Service: Per-item suppression rates and their means.

    Business Rules:
    - Negative suppression rates stay in the mean
    - Items are keyed by (study_id, item_id) when studies are named
    - The pooled mean is the unweighted mean over retained items
    """

    @staticmethod
    def estimate_intervention_strength(
        records: "list[SurveyRecord] | pd.DataFrame",
        control_floor: float = CalibrationDefaults.CONTROL_FLOOR,
    ) -> StrengthEstimate:
        """
        Estimate the mean suppression rate.

        Args:
            records: Survey records or a validated survey table.
            control_floor: Minimum rescaled control mean of a retained item.

        Returns:
            StrengthEstimate: Per-item table, pooled mean, per-study means and exclusions.

        Raises:
            SurveyDataError: If an item lacks a condition or no item passes the floor.
        """
        frame = records_to_frame(records) if isinstance(records, list) else records.copy()
        if frame.empty:
            raise SurveyDataError("Survey holds no responses.")

        has_studies = "study_id" in frame.columns and frame["study_id"].notna().any()
        keys = ["study_id", "item_id"] if has_studies else ["item_id"]
        if has_studies:
            frame["study_id"] = frame["study_id"].fillna("").astype(str)
        frame["item_id"] = frame["item_id"].astype(str)

        frame["rescaled"] = (frame["response"] - frame["scale_min"]) / (frame["scale_max"] - frame["scale_min"])
        frame["condition"] = frame["condition"].map(lambda value: SurveyCondition(value).value)

        means = frame.pivot_table(index=keys, columns="condition", values="rescaled", aggfunc="mean")
        means = means.reindex(columns=[SurveyCondition.CONTROL.value, SurveyCondition.TREATMENT.value])
        incomplete = means[means.isna().any(axis=1)]
        if not incomplete.empty:
            item = incomplete.index[0]
            missing = [condition for condition in means.columns if pd.isna(incomplete.iloc[0][condition])]
            raise SurveyDataError(f"Item {item!r} has no {' or '.join(missing)} responses.")

        means = means.rename(columns={"control": "control_mean", "treatment": "treatment_mean"}).reset_index()
        below = means["control_mean"] < control_floor
        excluded = [
            (str(item), float(mean))
            for item, mean in zip(means.loc[below, "item_id"], means.loc[below, "control_mean"], strict=True)
        ]
        for item, mean in excluded:
            logger.info("Excluding item %s (control mean %.3f below %.2f)", item, mean, control_floor)

        retained = means.loc[~below].copy()
        if retained.empty:
            raise SurveyDataError(f"No item reaches the control floor {control_floor}.")
        retained["suppression_rate"] = (
            retained["control_mean"] - retained["treatment_mean"]
        ) / retained["control_mean"]
        retained.columns.name = None

        per_study = {}
        if has_studies:
            study_means = retained.groupby("study_id")["suppression_rate"].mean()
            per_study = {str(study): float(rate) for study, rate in study_means.items()}

        mean_epsilon = float(np.mean(retained["suppression_rate"].to_numpy()))
        logger.info("Mean suppression rate %.4f over %d item(s)", mean_epsilon, len(retained))
        return StrengthEstimate(
            per_item=retained.reset_index(drop=True),
            mean_epsilon=mean_epsilon,
            excluded_items=excluded,
            control_floor=control_floor,
            per_study=per_study,
        )
