"""
Domain Service applying intervention operators to susceptibilities.
"""

import numpy as np

from src.interventions.domain.value_objects import InterventionPlan


class SusceptibilityModifierService:
    """
    Domain Service: Multiplicative intervention effects on s_v.

    Nudging and prebunking act before diffusion; contextualization acts on
    not-yet-active users from time T on. Effects combine independently.
    """

    @staticmethod
    def effective_susceptibility(
        base: float,
        plan: InterventionPlan,
        node_is_target_of_prebunk: bool,
        time_at_or_after_t: bool,
    ) -> float:
        """
        Susceptibility of one node under a plan.

        Args:
            base: Unmodified s_v in [0, 1].
            plan: Interventions in effect.
            node_is_target_of_prebunk: Whether the node was prebunked.
            time_at_or_after_t: Whether contextualization has started.

        Returns:
            float: Effective susceptibility in [0, 1].
        """
        factor = SusceptibilityModifierService.pre_diffusion_factor(plan, node_is_target_of_prebunk)
        value = base * factor
        if plan.contextualize is not None and time_at_or_after_t:
            value = value * (1.0 - plan.contextualize.epsilon)
        return value

    @staticmethod
    def pre_diffusion_factor(plan: InterventionPlan, prebunked: bool) -> float:
        """Product of the nudge factor and, for targets, the prebunk factor."""
        factor = 1.0
        if plan.nudge is not None:
            factor *= 1.0 - plan.nudge.epsilon
        if plan.prebunk is not None and prebunked:
            factor *= 1.0 - plan.prebunk.epsilon
        return factor

    @staticmethod
    def pre_diffusion_susceptibility(
        susceptibility: np.ndarray,
        plan: InterventionPlan,
        targets: np.ndarray | None = None,
    ) -> np.ndarray:
        """
        Vectorised susceptibility before time T.

        Args:
            susceptibility: Base values per node.
            plan: Interventions in effect.
            targets: Prebunked node ids (ignored without a prebunk entry).

        Returns:
            np.ndarray: New array of effective values.
        """
        base = np.asarray(susceptibility, dtype=float)
        factors = np.full(len(base), SusceptibilityModifierService.pre_diffusion_factor(plan, prebunked=False))
        if plan.prebunk is not None and targets is not None and len(targets):
            factors[np.asarray(targets, dtype=np.int64)] = SusceptibilityModifierService.pre_diffusion_factor(
                plan, prebunked=True
            )
        return base * factors

    @staticmethod
    def post_context_susceptibility(pre_diffusion: np.ndarray, plan: InterventionPlan) -> np.ndarray:
        """
        Vectorised susceptibility from time T on.

        Args:
            pre_diffusion: Output of `pre_diffusion_susceptibility`.
            plan: Interventions in effect.

        Returns:
            np.ndarray: Values with the contextualization factor applied (a copy).
        """
        values = np.array(pre_diffusion, dtype=float)
        if plan.contextualize is not None:
            values *= 1.0 - plan.contextualize.epsilon
        return values
