"""
Diffusion Domain Value Object - Diffusion Parameters.
"""

from dataclasses import dataclass

from src.shared.domain.exceptions import InvalidParameterError
from src.shared.domain.validation import require_positive, require_unit_interval


@dataclass(frozen=True)
class DiffusionParams:
    """
    Value Object: Contagiousness and delay rate of the CTIC model.

    The transmission probability on edge u -> v is eta * s_v; delays follow
    Exp(delay_rate) in hours.
    """

    eta: float
    delay_rate: float

    def __post_init__(self):
        object.__setattr__(self, "eta", require_unit_interval("eta", self.eta))
        object.__setattr__(self, "delay_rate", require_positive("lambda", self.delay_rate))

    @staticmethod
    def from_dict(data: dict) -> "DiffusionParams":
        """Build from a mapping with keys "eta" and "lambda"."""
        try:
            return DiffusionParams(eta=data["eta"], delay_rate=data["lambda"])
        except KeyError as error:
            raise InvalidParameterError(f"Diffusion parameters need '{error.args[0]}'.") from error

    def to_dict(self) -> dict:
        return {"eta": self.eta, "lambda": self.delay_rate}

    def with_eta(self, eta: float) -> "DiffusionParams":
        """Copy with another contagiousness."""
        return DiffusionParams(eta=eta, delay_rate=self.delay_rate)
