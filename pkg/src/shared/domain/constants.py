"""
Shared Domain Model Constants.
"""


class PaperEstimates:
    """
    Empirically calibrated parameters of the misinformation diffusion model.

    - Diffusion parameters fitted to the Twitter retweet cascades.
    - Intervention strengths estimated from the survey studies.
    - Scale and timing taken from reported field values.
    """

    ETA = 0.026  # Contagiousness
    LAMBDA = 0.25  # Delay rate (1/hours)

    EPSILON_NUDGE = 0.143
    EPSILON_PREBUNK = 0.204
    EPSILON_CONTEXT = 0.342

    DELTA_PREBUNK = 0.2  # ~ 0.179 of viewers watched the inoculation video
    PHI_CONTEXT = 0.8  # Notes appear late in the diffusion

    # Improvements used by the combined-intervention settings.
    STRENGTH_INCREMENT = 0.1
    REACH_INCREMENT = 0.1


class SimulationDefaults:
    """
    Defaults of the CTIC engine and the Monte Carlo orchestration.
    """

    CTX_TIME_RUNS = 200
    CTX_TIME_RESOLUTION_HOURS = 0.5
    SEED_SUSCEPTIBILITY = 1.0


class SpectralDefaults:
    """
    Defaults of the power iteration and the critical-epsilon bisection.
    """

    TOLERANCE = 1e-8
    MAX_ITERATIONS = 10_000
    STAGNATION_WINDOW = 500
    BISECTION_TOLERANCE = 1e-3


class CalibrationDefaults:
    """
    Defaults of the diffusion-parameter fit and the survey estimator.
    """

    MIN_CASCADE_SIZE = 100
    CASCADE_WINDOW_HOURS = 100.0
    LOSS_WINDOW_HOURS = 48.0
    LOSS_STEP_HOURS = 1.0
    RUNS_PER_CELL = 50

    # eta in {0.002, 0.004, ..., 0.060}, lambda in {0.05, 0.10, ..., 1.00}.
    ETA_GRID = tuple(round(0.002 * i, 3) for i in range(1, 31))
    LAMBDA_GRID = tuple(round(0.05 * i, 2) for i in range(1, 21))

    CONTROL_FLOOR = 0.10


class ExperimentDefaults:
    """
    Desk-scale experiment grids and run budgets.
    """

    RUNS_PER_CELL = 200
    EPSILON_STEPS = 21
    ETA_STEPS = 15
    ETA_MIN = 0.005
    ETA_MAX = 0.1
    SCALE_STEPS = 11
    PHI_STEPS = 11
    NETWORK_NODES = 2000
    NETWORK_ATTACHMENT = 5

    # "scored" susceptibility law: a point mass at 1 plus Beta draws for the rest.
    FULLY_SUSCEPTIBLE_SHARE = 0.2
    SCORE_BETA_SHAPE = (1.0, 3.0)

    # Full-scale counterparts.
    FULL_RUNS_PER_CELL = 1000
    FULL_EPSILON_STEPS = 51
    FULL_ETA_STEPS = 30
    FULL_SCALE_STEPS = 21
    TARGETING_RUNS_PER_CELL = 500
