"""
Interventions Domain Value Objects - Intervention Plan.
"""

from dataclasses import dataclass, field, replace

from src.shared.domain.constants import PaperEstimates
from src.shared.domain.enums import InterventionKind, TargetStrategy
from src.shared.domain.exceptions import InvalidParameterError
from src.shared.domain.validation import require_unit_interval


@dataclass(frozen=True)
class NudgeSpec:
    """
    Value Object: Uniform susceptibility reduction of all users before diffusion.
    """

    epsilon: float

    def __post_init__(self):
        object.__setattr__(self, "epsilon", require_unit_interval("nudge.epsilon", self.epsilon))


@dataclass(frozen=True)
class PrebunkSpec:
    """
    Value Object: Susceptibility reduction of a fraction of users before diffusion.

    Business Rules:
    - `delta` is the fraction of nodes targeted, ranked by `strategy`
    - Random targets are re-drawn per Monte Carlo run unless `fixed_targets` is set
    """

    epsilon: float
    delta: float
    strategy: TargetStrategy = TargetStrategy.RANDOM
    rng_seed: int = 0
    fixed_targets: bool = False

    def __post_init__(self):
        object.__setattr__(self, "epsilon", require_unit_interval("prebunk.epsilon", self.epsilon))
        object.__setattr__(self, "delta", require_unit_interval("prebunk.delta", self.delta))
        object.__setattr__(self, "strategy", TargetStrategy.parse(self.strategy))
        object.__setattr__(self, "rng_seed", int(self.rng_seed))

    @property
    def redraw_per_run(self) -> bool:
        """True when each run draws its own target set."""
        return self.strategy is TargetStrategy.RANDOM and not self.fixed_targets


@dataclass(frozen=True)
class ContextualizeSpec:
    """
    Value Object: Susceptibility reduction of not-yet-active users from time T on.

    Exactly one of `phi` (diffusion stage, resolved to T from the
    no-intervention prevalence curve) or `explicit_time` (hours) is set.
    """

    epsilon: float
    phi: float | None = None
    explicit_time: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "epsilon", require_unit_interval("contextualize.epsilon", self.epsilon))
        if (self.phi is None) == (self.explicit_time is None):
            raise InvalidParameterError("contextualize needs exactly one of 'phi' or 'explicit_time'.")
        if self.phi is not None:
            object.__setattr__(self, "phi", require_unit_interval("contextualize.phi", self.phi))
        if self.explicit_time is not None:
            explicit_time = float(self.explicit_time)
            if not explicit_time >= 0.0:
                raise InvalidParameterError(f"contextualize.explicit_time must be >= 0, got {self.explicit_time!r}.")
            object.__setattr__(self, "explicit_time", explicit_time)


@dataclass(frozen=True)
class InterventionPlan:
    """
    Value Object: Which interventions apply, with what strength, scale, timing and targeting.

    Effects combine independently and multiplicatively.
    """

    nudge: NudgeSpec | None = None
    prebunk: PrebunkSpec | None = None
    contextualize: ContextualizeSpec | None = field(default=None)

    @staticmethod
    def none() -> "InterventionPlan":
        """Plan without any intervention."""
        return InterventionPlan()

    @property
    def is_empty(self) -> bool:
        """True when no intervention is configured."""
        return self.nudge is None and self.prebunk is None and self.contextualize is None

    @property
    def needs_ctx_time_resolution(self) -> bool:
        """True when contextualization is staged by phi and T must be resolved first."""
        return self.contextualize is not None and self.contextualize.phi is not None

    @staticmethod
    def single(
        kind: InterventionKind,
        epsilon: float,
        delta: float = 1.0,
        strategy: TargetStrategy = TargetStrategy.RANDOM,
        phi: float | None = None,
        rng_seed: int = 0,
    ) -> "InterventionPlan":
        """
        Factory Method: Plan with a single intervention.

        Args:
            kind: Intervention type.
            epsilon: Strength.
            delta: Prebunking scale.
            strategy: Prebunking target strategy.
            phi: Contextualization stage (field estimate when omitted).
            rng_seed: Seed for Random prebunking targets.

        Returns:
            InterventionPlan: Plan with one entry set.
        """
        if kind is InterventionKind.NUDGE:
            return InterventionPlan(nudge=NudgeSpec(epsilon))
        if kind is InterventionKind.PREBUNK:
            return InterventionPlan(prebunk=PrebunkSpec(epsilon, delta, strategy, rng_seed))
        return InterventionPlan(
            contextualize=ContextualizeSpec(epsilon, phi=phi if phi is not None else PaperEstimates.PHI_CONTEXT)
        )

    def combined_with(self, other: "InterventionPlan") -> "InterventionPlan":
        """
        Plan holding the entries of both plans (entries of `other` win on overlap).

        Args:
            other: Plan to merge in.

        Returns:
            InterventionPlan: Merged plan.
        """
        return replace(
            self,
            nudge=other.nudge or self.nudge,
            prebunk=other.prebunk or self.prebunk,
            contextualize=other.contextualize or self.contextualize,
        )

    @staticmethod
    def from_dict(data: dict | None) -> "InterventionPlan":
        """
        Build a plan from its configuration mapping.

        Keys: "nudge": {"epsilon"}, "prebunk": {"epsilon", "delta", "strategy",
        "rng_seed", "fixed_targets"}, "contextualize": {"epsilon", "phi" | "explicit_time"}.

        Args:
            data: Mapping (None or empty for no intervention).

        Returns:
            InterventionPlan: Parsed plan.
        """
        if not data:
            return InterventionPlan()
        unknown = set(data) - {"nudge", "prebunk", "contextualize"}
        if unknown:
            raise InvalidParameterError(f"Unknown intervention(s): {', '.join(sorted(unknown))}.")

        nudge = data.get("nudge")
        prebunk = data.get("prebunk")
        contextualize = data.get("contextualize")
        return InterventionPlan(
            nudge=NudgeSpec(**nudge) if nudge else None,
            prebunk=PrebunkSpec(**prebunk) if prebunk else None,
            contextualize=ContextualizeSpec(**contextualize) if contextualize else None,
        )

    def to_dict(self) -> dict:
        """Convert to the configuration mapping."""
        result: dict = {}
        if self.nudge is not None:
            result["nudge"] = {"epsilon": self.nudge.epsilon}
        if self.prebunk is not None:
            result["prebunk"] = {
                "epsilon": self.prebunk.epsilon,
                "delta": self.prebunk.delta,
                "strategy": self.prebunk.strategy.value,
                "rng_seed": self.prebunk.rng_seed,
                "fixed_targets": self.prebunk.fixed_targets,
            }
        if self.contextualize is not None:
            entry: dict = {"epsilon": self.contextualize.epsilon}
            if self.contextualize.phi is not None:
                entry["phi"] = self.contextualize.phi
            else:
                entry["explicit_time"] = self.contextualize.explicit_time
            result["contextualize"] = entry
        return result
