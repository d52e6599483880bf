"""
SurveyDataException Module.
"""


class SurveyDataError(ValueError):
    """
    Raised when survey records are unusable for strength estimation.

    Args:
        message: Description of the data problem (names the item or row)
    """

    def __init__(self, message: str = "Invalid calibration data"):
        """
        Initialize SurveyDataError.
        """
        self.message = message
        super().__init__(self.message)
