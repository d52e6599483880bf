"""
GraphFormatException Module.
"""


class GraphFormatError(ValueError):
    """
    Raised when a network input file cannot be parsed.

    This exception is raised when:
    - An edge line does not hold exactly two node ids
    - A susceptibility line does not hold a node id and a number
    - A susceptibility value lies outside [0, 1]

    Args:
        message: Description of the parse failure
        line_number: 1-based line number of the offending line, if known
    """

    def __init__(self, message: str = "Invalid network file", line_number: int | None = None):
        """
        Initialize GraphFormatError.
        """
        self.line_number = line_number
        self.message = message if line_number is None else f"line {line_number}: {message}"
        super().__init__(self.message)
