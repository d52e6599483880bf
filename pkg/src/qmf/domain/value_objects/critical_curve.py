"""
QMF Domain Value Objects - Critical Curve and its request.
"""

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from src.shared.domain.constants import SpectralDefaults
from src.shared.domain.enums import InterventionKind, TargetStrategy
from src.shared.domain.exceptions import InvalidParameterError


@dataclass(frozen=True)
class CriticalCurve:
    """
    Value Object: Critical strength per axis value; None where no epsilon <= 1 reaches criticality.
    """

    axis_name: str
    axis: tuple[float, ...]
    critical_epsilon: tuple[float | None, ...]
    label: str = ""

    def __post_init__(self):
        if len(self.axis) != len(self.critical_epsilon):
            raise InvalidParameterError("Curve axis and values differ in length.")

    def to_frame(self) -> pd.DataFrame:
        """Table with columns axis_value, critical_epsilon (NaN for absent)."""
        return pd.DataFrame(
            {
                "axis_value": np.asarray(self.axis, dtype=float),
                "critical_epsilon": [np.nan if value is None else value for value in self.critical_epsilon],
            }
        )


@dataclass(frozen=True)
class CurveSpec:
    """
    Value Object: Which critical curve to compute.

    - nudge over an eta grid
    - prebunk over a delta grid at fixed eta
    - prebunk over an eta grid at fixed delta
    """

    intervention: InterventionKind
    vary: str
    values: tuple[float, ...]
    eta: float | None = None
    delta: float | None = None
    strategy: TargetStrategy = TargetStrategy.RANDOM
    seed_node: int | None = None
    rng_seed: int = 0
    bisect_tol: float = field(default=SpectralDefaults.BISECTION_TOLERANCE)

    def __post_init__(self):
        object.__setattr__(self, "intervention", InterventionKind(self.intervention))
        object.__setattr__(self, "strategy", TargetStrategy.parse(self.strategy))
        object.__setattr__(self, "values", tuple(float(value) for value in self.values))

        if self.intervention is InterventionKind.CONTEXTUALIZE:
            raise InvalidParameterError("Contextualization has no mean-field critical curve.")
        if self.vary not in ("eta", "delta"):
            raise InvalidParameterError(f"vary must be 'eta' or 'delta', got {self.vary!r}.")
        if not self.values or any(b < a for a, b in zip(self.values, self.values[1:])):
            raise InvalidParameterError("Curve grid must be nonempty and sorted.")
        if self.intervention is InterventionKind.NUDGE and self.vary != "eta":
            raise InvalidParameterError("The nudging curve varies eta.")
        if self.vary == "delta" and self.eta is None:
            raise InvalidParameterError("A delta curve needs a fixed eta.")
        if self.intervention is InterventionKind.PREBUNK and self.vary == "eta" and self.delta is None:
            raise InvalidParameterError("A prebunking eta curve needs a fixed delta.")
