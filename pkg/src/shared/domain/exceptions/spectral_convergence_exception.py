"""
SpectralConvergenceException Module.
"""


class SpectralConvergenceError(RuntimeError):
    """
    Raised when a spectral radius is required to converge and did not.

    Args:
        residual: Relative residual of the best estimate
        iterations: Iterations spent
    """

    def __init__(self, residual: float, iterations: int):
        """
        Initialize SpectralConvergenceError.
        """
        self.residual = residual
        self.iterations = iterations
        self.message = f"Power iteration did not converge after {iterations} iterations (residual {residual:.3g})."
        super().__init__(self.message)
