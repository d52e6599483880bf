"""
Calibration Domain Value Object - Survey Record.
"""

from dataclasses import dataclass

from src.shared.domain.enums import SurveyCondition
from src.shared.domain.exceptions import SurveyDataError


@dataclass(frozen=True)
class SurveyRecord:
    """
    Value Object: One sharing-willingness response z(a, u).

    Invariants:
    - scale_max > scale_min
    - response within [scale_min, scale_max]
    """

    item_id: str
    participant_id: str
    condition: SurveyCondition
    response: float
    scale_min: float
    scale_max: float
    study_id: str | None = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "condition", SurveyCondition(self.condition))
        except ValueError as error:
            raise SurveyDataError(
                f"Item '{self.item_id}', participant '{self.participant_id}': unknown condition '{self.condition}'."
            ) from error
        if not self.scale_max > self.scale_min:
            raise SurveyDataError(f"Item '{self.item_id}': scale_max must exceed scale_min.")
        if not self.scale_min <= self.response <= self.scale_max:
            raise SurveyDataError(
                f"Item '{self.item_id}', participant '{self.participant_id}': "
                f"response {self.response} outside [{self.scale_min}, {self.scale_max}]."
            )

    @property
    def rescaled(self) -> float:
        """Response mapped linearly onto [0, 1]."""
        return (self.response - self.scale_min) / (self.scale_max - self.scale_min)

    def to_dict(self) -> dict:
        return {
            "item_id": self.item_id,
            "participant_id": self.participant_id,
            "condition": self.condition.value,
            "response": self.response,
            "scale_min": self.scale_min,
            "scale_max": self.scale_max,
            "study_id": self.study_id,
        }
