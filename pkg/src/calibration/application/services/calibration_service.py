"""
Calibration Application Service.
"""

from pathlib import Path

from src.graph.domain.entities import DirectedGraph
from src.shared.application.services import BaseService
from src.shared.domain.constants import CalibrationDefaults
from src.shared.domain.events import IDomainEventPublisher
from src.shared.infrastructure import get_logger
from src.calibration.domain.services import CascadeCurveService, DiffusionFitService, StrengthEstimationService
from src.calibration.domain.value_objects import FitResult, StrengthEstimate
from src.calibration.infrastructure.repositories import CascadeCsvRepository, SurveyCsvRepository

logger = get_logger(__name__)


class CalibrationService(BaseService):
    """
    Application Service for the two calibration pipelines.

    Coordinates workflow:
    1. Read cascades, keep the large ones, fit (eta, lambda) by grid search
    2. Read survey responses and estimate the mean suppression rate
    """

    def __init__(self, workers: int = 1, event_bus: IDomainEventPublisher | None = None):
        super().__init__(repository=None, event_bus=event_bus)
        self._workers = workers

    def calibrate_diffusion(
        self,
        graph: DirectedGraph,
        cascades_path: str | Path,
        eta_grid=CalibrationDefaults.ETA_GRID,
        lambda_grid=CalibrationDefaults.LAMBDA_GRID,
        min_size: int = CalibrationDefaults.MIN_CASCADE_SIZE,
        within_hours: float = CalibrationDefaults.CASCADE_WINDOW_HOURS,
        loss_window_hours: float = CalibrationDefaults.LOSS_WINDOW_HOURS,
        runs_per_cell: int = CalibrationDefaults.RUNS_PER_CELL,
        master_seed: int = 0,
        count_root: bool = True,
    ) -> FitResult:
        """
        Use case: Fit the diffusion parameters to observed cascades.

        Returns:
            FitResult: Best cell and loss surface.
        """
        cascades = CascadeCsvRepository(cascades_path).load()
        retained = CascadeCurveService.filter_cascades(cascades, min_size, within_hours)
        logger.info(
            "%d of %d cascade(s) reach %d events within %.0f h", len(retained), len(cascades), min_size, within_hours
        )
        return DiffusionFitService.fit_diffusion_params(
            graph,
            retained,
            eta_grid=eta_grid,
            lambda_grid=lambda_grid,
            loss_window_hours=loss_window_hours,
            runs_per_cell=runs_per_cell,
            master_seed=master_seed,
            count_root=count_root,
            workers=self._workers,
        )

    def calibrate_intervention(
        self, survey_path: str | Path, control_floor: float = CalibrationDefaults.CONTROL_FLOOR
    ) -> StrengthEstimate:
        """
        Use case: Estimate an intervention strength from survey responses.

        Returns:
            StrengthEstimate: Per-item suppression rates and means.
        """
        responses = SurveyCsvRepository(survey_path).load()
        return StrengthEstimationService.estimate_intervention_strength(responses, control_floor)
