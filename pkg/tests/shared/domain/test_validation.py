"""
Unit Tests for the shared parameter validation helpers.

Test categories:
- Unit interval tests
- Positive value tests
"""

import math

import pytest

from src.shared.domain.exceptions import InvalidParameterError
from src.shared.domain.validation import require_positive, require_unit_interval


class TestRequireUnitInterval:
    """Test require_unit_interval."""

    @pytest.mark.parametrize("value", [0, 0.0, 0.5, 1, 1.0])
    def test_accepts_closed_interval(self, value):
        """Test that both bounds are accepted and converted to float."""
        result = require_unit_interval("epsilon", value)

        assert result == float(value)
        assert isinstance(result, float)

    @pytest.mark.parametrize("value", [-1e-12, 1.0000001, math.nan, math.inf])
    def test_rejects_out_of_range(self, value):
        """Test that values outside [0, 1] and NaN are rejected."""
        with pytest.raises(InvalidParameterError, match="epsilon"):
            require_unit_interval("epsilon", value)

    @pytest.mark.parametrize("value", ["high", None, [0.5]])
    def test_rejects_non_numbers(self, value):
        """Test that non-numeric input is rejected with the parameter name."""
        with pytest.raises(InvalidParameterError, match="delta"):
            require_unit_interval("delta", value)


class TestRequirePositive:
    """Test require_positive."""

    def test_accepts_positive(self):
        """Test a valid rate."""
        assert require_positive("lambda", "0.25") == 0.25

    @pytest.mark.parametrize("value", [0, -0.5, math.inf, math.nan, "abc"])
    def test_rejects_non_positive_or_non_finite(self, value):
        """Test invalid rates."""
        with pytest.raises(InvalidParameterError, match="lambda"):
            require_positive("lambda", value)
