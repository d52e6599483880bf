"""
src.diffusion.domain.services - Diffusion Domain Services module.
"""

from .context_time_service import ContextTimeService
from .ctic_simulator import CTICSimulator
from .monte_carlo_service import MonteCarloRunner, RunOutcome, automatic_time_grid, summarize
from .run_seed_service import DIFFUSION_STREAM, TARGET_STREAM, derive_run_seed
from .seed_selection_service import SeedSelectionService

__all__ = [
    "CTICSimulator",
    "ContextTimeService",
    "DIFFUSION_STREAM",
    "MonteCarloRunner",
    "RunOutcome",
    "SeedSelectionService",
    "TARGET_STREAM",
    "automatic_time_grid",
    "derive_run_seed",
    "summarize",
]
