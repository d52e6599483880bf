"""
src.interventions.domain.value_objects - Interventions Domain Value Objects module.
"""

from .intervention_plan import ContextualizeSpec, InterventionPlan, NudgeSpec, PrebunkSpec

__all__ = [
    "ContextualizeSpec",
    "InterventionPlan",
    "NudgeSpec",
    "PrebunkSpec",
]
