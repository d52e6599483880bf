"""
InvalidParameterException Module.
"""


class InvalidParameterError(ValueError):
    """
    Raised when a model parameter violates its domain.

    This exception is raised when:
    - A strength, scale or stage lies outside [0, 1]
    - A delay rate is not positive
    - A node id is outside the graph
    - A required argument (seed node, context time) is missing

    Args:
        message: Description of the violated constraint
    """

    def __init__(self, message: str = "Invalid model parameter"):
        """
        Initialize InvalidParameterError.
        """
        self.message = message
        super().__init__(self.message)
