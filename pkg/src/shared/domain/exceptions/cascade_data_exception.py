"""
CascadeDataException Module.
"""


class CascadeDataError(ValueError):
    """
    Raised when a cascade file violates its format.

    This exception is raised when:
    - A required column is missing
    - A timestamp is not a non-negative number
    - A cascade id is empty

    Args:
        message: Description of the problem, naming the offending row
    """

    def __init__(self, message: str = "Invalid cascade data"):
        """
        Initialize CascadeDataError.
        """
        self.message = message
        super().__init__(self.message)
