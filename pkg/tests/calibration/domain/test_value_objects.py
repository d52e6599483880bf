"""
Unit Tests for the calibration value objects.

Test categories:
- CascadeRecord tests
- SurveyRecord tests
- StrengthEstimate tests
"""

import numpy as np
import pandas as pd
import pytest

from src.calibration.domain.value_objects import CascadeRecord, StrengthEstimate, SurveyRecord
from src.shared.domain.enums import SurveyCondition
from src.shared.domain.exceptions import CascadeDataError, SurveyDataError


class TestCascadeRecord:
    """Test CascadeRecord."""

    @pytest.fixture
    def cascade(self):
        """Root at hour 10 and three reshares."""
        return CascadeRecord("c1", ("r", "a", "b", "c"), np.array([10.0, 10.5, 12.0, 40.0]))

    def test_offsets_from_root(self, cascade):
        """Test times relative to the first event."""
        assert cascade.offsets.tolist() == [0.0, 0.5, 2.0, 30.0]
        assert cascade.size == 4

    def test_size_within_window(self, cascade):
        """Test the window count including the root."""
        assert cascade.size_within(2.0) == 3
        assert cascade.size_within(0.0) == 1

    def test_count_at_with_and_without_root(self, cascade):
        """Test the cumulative counts."""
        assert cascade.count_at([0.0, 1.0, 48.0]).tolist() == [1, 2, 4]
        assert cascade.count_at([0.0, 1.0, 48.0], count_root=False).tolist() == [0, 1, 3]

    @pytest.mark.parametrize(
        ("nodes", "times", "message"),
        [
            ((), [], "no events"),
            (("a",), [1.0, 2.0], "counts differ"),
            (("a", "b"), [1.0, -1.0], "non-negative"),
            (("a", "b"), [2.0, 1.0], "non-decreasing"),
        ],
    )
    def test_invalid_cascades(self, nodes, times, message):
        """Test the invariants."""
        with pytest.raises(CascadeDataError, match=message):
            CascadeRecord("bad", nodes, np.array(times))


class TestSurveyRecord:
    """Test SurveyRecord."""

    def test_rescaled_response(self):
        """Test the mapping onto [0, 1]."""
        record = SurveyRecord("q1", "p1", "treatment", 4.0, 1.0, 7.0)

        assert record.condition is SurveyCondition.TREATMENT
        assert record.rescaled == pytest.approx(0.5)

    def test_unknown_condition(self):
        """Test condition validation."""
        with pytest.raises(SurveyDataError, match="unknown condition"):
            SurveyRecord("q1", "p1", "placebo", 4.0, 1.0, 7.0)

    def test_response_outside_scale(self):
        """Test the range check."""
        with pytest.raises(SurveyDataError, match="outside"):
            SurveyRecord("q1", "p1", "control", 8.0, 1.0, 7.0)

    def test_degenerate_scale(self):
        """Test scale_max > scale_min."""
        with pytest.raises(SurveyDataError, match="scale_max"):
            SurveyRecord("q1", "p1", "control", 1.0, 1.0, 1.0)


class TestStrengthEstimate:
    """Test StrengthEstimate."""

    def test_mean_of_study_means(self):
        """Test the unweighted mean over studies."""
        estimate = StrengthEstimate(pd.DataFrame(), 0.2, [], 0.1, per_study={"s1": 0.1, "s2": 0.4})

        assert estimate.mean_of_study_means == pytest.approx(0.25)

    def test_no_studies(self):
        """Test the value without study ids."""
        estimate = StrengthEstimate(pd.DataFrame({"item_id": ["q1"]}), 0.2, [("q9", 0.05)], 0.1)

        assert estimate.mean_of_study_means is None
        assert estimate.to_dict()["excluded_items"] == [{"item_id": "q9", "control_mean": 0.05}]
