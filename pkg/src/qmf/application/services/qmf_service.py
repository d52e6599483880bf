"""
QMF Application Service.
"""

from src.graph.domain.entities import DirectedGraph
from src.shared.application.services import BaseService
from src.shared.domain.constants import SpectralDefaults
from src.shared.domain.events import IDomainEventPublisher
from src.shared.domain.exceptions import SpectralConvergenceError
from src.shared.infrastructure import get_logger
from src.qmf.domain.services import CriticalConditionService, SpectralRadiusService
from src.qmf.domain.value_objects import CriticalCurve, CurveSpec, SpectralReport

logger = get_logger(__name__)


class QMFService(BaseService):
    """
    Application Service for the mean-field critical-condition analysis.
    """

    def __init__(
        self,
        tol: float = SpectralDefaults.TOLERANCE,
        max_iter: int = SpectralDefaults.MAX_ITERATIONS,
        require_convergence: bool = False,
        event_bus: IDomainEventPublisher | None = None,
    ):
        super().__init__(repository=None, event_bus=event_bus)
        self._tol = tol
        self._max_iter = max_iter
        self._require_convergence = require_convergence

    def spectral_radius(self, graph: DirectedGraph, eta: float) -> SpectralReport:
        """
        Use case: Lambda_max(eta A diag(s)).

        Raises:
            SpectralConvergenceError: If convergence is required and not reached.
        """
        report = SpectralRadiusService.spectral_radius(graph, eta, tol=self._tol, max_iter=self._max_iter)
        if self._require_convergence and not report.converged:
            raise SpectralConvergenceError(report.residual, report.iterations)
        logger.info(
            "Spectral radius %.6f at eta=%.4f (%d iterations, residual %.2g)",
            report.spectral_radius,
            eta,
            report.iterations,
            report.residual,
        )
        return report

    def curves(self, graph: DirectedGraph, specs: list[CurveSpec]) -> list[CriticalCurve]:
        """Use case: Critical curves for each requested spec."""
        result = []
        for spec in specs:
            curve = CriticalConditionService.critical_curve(graph, spec)
            absent = sum(value is None for value in curve.critical_epsilon)
            logger.info(
                "Critical curve %s over %s: %d point(s), %d absent",
                curve.label,
                curve.axis_name,
                len(curve.axis),
                absent,
            )
            result.append(curve)
        return result
