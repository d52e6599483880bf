"""
Shared Domain Enums Module.

Consolidated file containing all shared domain enumerations.
"""

from enum import Enum


class TargetStrategy(Enum):
    """
    Enumeration for prebunking target selection strategies.

    Used to rank nodes when only a fraction of users can be intervened on.
    """

    RANDOM = "random"  # Uniform without replacement
    DEGREE = "degree"  # Highest out-degree first
    SUSCEPTIBILITY = "susceptibility"  # Highest susceptibility first
    DISTANCE = "distance"  # Closest to the diffusion seed first

    @classmethod
    def parse(cls, value: "str | TargetStrategy") -> "TargetStrategy":
        """
        Parse a strategy from its config value (case-insensitive).

        Args:
            value: Strategy name or enum member.

        Returns:
            TargetStrategy: Matching member.

        Raises:
            ValueError: If the name matches no strategy.
        """
        if isinstance(value, cls):
            return value
        normalized = str(value).strip().lower()
        for member in cls:
            if normalized in (member.value, member.name.lower()):
                return member
        choices = ", ".join(member.value for member in cls)
        raise ValueError(f"Unknown target strategy '{value}' (expected one of: {choices}).")

    @property
    def is_deterministic(self) -> bool:
        """True when the ranking does not depend on a random draw."""
        return self is not TargetStrategy.RANDOM


class InterventionKind(Enum):
    """
    Enumeration for the three user-level interventions.
    """

    NUDGE = "nudge"  # All users, before diffusion
    PREBUNK = "prebunk"  # A fraction of users, before diffusion
    CONTEXTUALIZE = "contextualize"  # Not-yet-active users, from time T


class SurveyCondition(Enum):
    """
    Enumeration for the randomized survey conditions.
    """

    CONTROL = "control"
    TREATMENT = "treatment"


class SuccessEvaluation(Enum):
    """
    Enumeration for when the transmission success draw reads the susceptibility.
    """

    DELIVERY = "delivery"  # Susceptibility in effect when the message arrives
    SCHEDULING = "scheduling"  # Susceptibility in effect when the sender activates
