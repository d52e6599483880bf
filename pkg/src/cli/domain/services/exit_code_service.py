"""
Domain Service mapping failures to process exit codes.
"""

from src.shared.domain.exceptions import (
    CascadeDataError,
    ConfigurationError,
    GraphFormatError,
    InvalidParameterError,
    NoFullySusceptibleNodeError,
    SpectralConvergenceError,
    SurveyDataError,
)


class ExitCode:
    """
    Documented exit codes of the command line.
    """

    OK = 0
    UNEXPECTED = 1
    CONFIGURATION = 2  # Schema violation, unknown preset or missing input file
    INPUT_DATA = 3  # Input file or parameter fails validation
    NUMERICAL = 4  # Spectral analysis did not converge (require_convergence set)


class ExitCodeService:
    """
    Domain Service: Classify an exception into its exit code.
    """

    _ORDER: tuple[tuple[tuple[type[BaseException], ...], int], ...] = (
        ((ConfigurationError, FileNotFoundError), ExitCode.CONFIGURATION),
        (
            (GraphFormatError, SurveyDataError, CascadeDataError, NoFullySusceptibleNodeError, InvalidParameterError),
            ExitCode.INPUT_DATA,
        ),
        ((SpectralConvergenceError,), ExitCode.NUMERICAL),
    )

    @staticmethod
    def exit_code_for(error: BaseException) -> int:
        """
        Exit code of a failure.

        Args:
            error: Raised exception.

        Returns:
            int: One of the ExitCode values (UNEXPECTED when unclassified).
        """
        for classes, code in ExitCodeService._ORDER:
            if isinstance(error, classes):
                return code
        return ExitCode.UNEXPECTED
