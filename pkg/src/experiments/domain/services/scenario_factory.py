"""
Domain Service building the combined-intervention scenarios.

Settings:
- (i) field estimates of strength, scale and timing
- (ii) every strength raised by 0.1
- (iii) prebunking reach raised by 0.1 and contextualization advanced by 0.1
- (iv) both improvements
Each setting holds the three single interventions and their combination.
"""

from src.interventions.domain.value_objects import ContextualizeSpec, InterventionPlan, NudgeSpec, PrebunkSpec
from src.shared.domain.constants import PaperEstimates
from src.shared.domain.enums import TargetStrategy
from src.diffusion.domain.value_objects import DiffusionParams
from src.experiments.domain.value_objects import Scenario

BASELINE_SCENARIO = "baseline"


def _clip(value: float) -> float:
    return min(max(value, 0.0), 1.0)


class ScenarioFactory:
    """
    Domain Service: Default scenario catalogue.
    """

    @staticmethod
    def setting_plans(
        eps_nudge: float = PaperEstimates.EPSILON_NUDGE,
        eps_prebunk: float = PaperEstimates.EPSILON_PREBUNK,
        eps_context: float = PaperEstimates.EPSILON_CONTEXT,
        delta: float = PaperEstimates.DELTA_PREBUNK,
        phi: float = PaperEstimates.PHI_CONTEXT,
        strategy: TargetStrategy = TargetStrategy.RANDOM,
    ) -> dict[str, InterventionPlan]:
        """
        Single and combined plans of one setting.

        Returns:
            dict[str, InterventionPlan]: Keys nudge, prebunk, contextualize, combined.
        """
        nudge = NudgeSpec(eps_nudge)
        prebunk = PrebunkSpec(eps_prebunk, delta, strategy)
        contextualize = ContextualizeSpec(eps_context, phi=phi)
        return {
            "nudge": InterventionPlan(nudge=nudge),
            "prebunk": InterventionPlan(prebunk=prebunk),
            "contextualize": InterventionPlan(contextualize=contextualize),
            "combined": InterventionPlan(nudge=nudge, prebunk=prebunk, contextualize=contextualize),
        }

    @staticmethod
    def default_scenarios(
        params: DiffusionParams | None = None,
        strength_increment: float = PaperEstimates.STRENGTH_INCREMENT,
        reach_increment: float = PaperEstimates.REACH_INCREMENT,
    ) -> list[Scenario]:
        """
        The baseline plus settings (i)-(iv), named "<setting>:<intervention>".

        Args:
            params: Diffusion parameters (field estimates when omitted).
            strength_increment: Strength improvement of settings (ii) and (iv).
            reach_increment: Scale and timing improvement of settings (iii) and (iv).

        Returns:
            list[Scenario]: Baseline first, then 4 x 4 scenarios.
        """
        params = params or DiffusionParams(PaperEstimates.ETA, PaperEstimates.LAMBDA)
        base_eps = (PaperEstimates.EPSILON_NUDGE, PaperEstimates.EPSILON_PREBUNK, PaperEstimates.EPSILON_CONTEXT)
        raised_eps = tuple(_clip(eps + strength_increment) for eps in base_eps)
        wider = {
            "delta": _clip(PaperEstimates.DELTA_PREBUNK + reach_increment),
            "phi": _clip(PaperEstimates.PHI_CONTEXT - reach_increment),
        }
        field = {"delta": PaperEstimates.DELTA_PREBUNK, "phi": PaperEstimates.PHI_CONTEXT}

        settings = {
            "i": (base_eps, field),
            "ii": (raised_eps, field),
            "iii": (base_eps, wider),
            "iv": (raised_eps, wider),
        }
        scenarios = [Scenario(BASELINE_SCENARIO, InterventionPlan.none(), params)]
        for setting, (eps, reach) in settings.items():
            plans = ScenarioFactory.setting_plans(*eps, delta=reach["delta"], phi=reach["phi"])
            scenarios.extend(Scenario(f"{setting}:{kind}", plan, params) for kind, plan in plans.items())
        return scenarios
