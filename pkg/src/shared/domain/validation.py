"""
Shared Domain Validation Helpers.
"""

import math

from src.shared.domain.exceptions import InvalidParameterError


def require_unit_interval(name: str, value: float) -> float:
    """
    Check that a strength, scale, stage or probability lies in [0, 1].

    Args:
        name: Parameter name used in the error message.
        value: Value to check.

    Returns:
        float: The value as float.

    Raises:
        InvalidParameterError: If the value is not a finite number in [0, 1].
    """
    try:
        number = float(value)
    except (TypeError, ValueError) as error:
        raise InvalidParameterError(f"{name} must be a number in [0, 1], got {value!r}.") from error

    if math.isnan(number) or not 0.0 <= number <= 1.0:
        raise InvalidParameterError(f"{name} must lie in [0, 1], got {value!r}.")
    return number


def require_positive(name: str, value: float) -> float:
    """
    Check that a rate, tolerance or resolution is strictly positive.

    Args:
        name: Parameter name used in the error message.
        value: Value to check.

    Returns:
        float: The value as float.

    Raises:
        InvalidParameterError: If the value is not a finite positive number.
    """
    try:
        number = float(value)
    except (TypeError, ValueError) as error:
        raise InvalidParameterError(f"{name} must be a positive number, got {value!r}.") from error

    if not math.isfinite(number) or number <= 0.0:
        raise InvalidParameterError(f"{name} must be positive, got {value!r}.")
    return number
