"""
Unit Tests for ConfigMergeService.

Test categories:
- Deep merge tests
- Override parsing tests
- Layer order tests
- Preset resolution tests
"""

import pytest

from src.cli.domain.services import ConfigMergeService
from src.cli.domain.value_objects.run_config import GRID_KEYS
from src.experiments.infrastructure.repositories import ExperimentPresetRepository
from src.shared.domain.exceptions import ConfigurationError


class TestMerge:
    """Test merge."""

    def test_nested_values_merge(self):
        """Test that siblings survive a nested update."""
        merged = ConfigMergeService.merge({"params": {"eta": 0.1, "lambda": 1.0}}, {"params": {"eta": 0.2}})

        assert merged == {"params": {"eta": 0.2, "lambda": 1.0}}

    def test_unknown_key_has_path(self):
        """Test the dotted path of an unknown key."""
        with pytest.raises(ConfigurationError) as error:
            ConfigMergeService.merge({"params": {"eta": 0.1}}, {"params": {"zeta": 1}})

        assert error.value.path == "params.zeta"

    def test_mapping_for_a_value(self):
        """Test a section given where a value is expected."""
        with pytest.raises(ConfigurationError, match="got a mapping"):
            ConfigMergeService.merge({"workers": None}, {"workers": {"count": 2}})

    def test_free_form_keys_replace(self):
        """Test that plan documents replace instead of merging."""
        merged = ConfigMergeService.merge({"plan": {"nudge": {"epsilon": 0.1}}}, {"plan": {"prebunk": {"epsilon": 0.2}}})

        assert merged == {"plan": {"prebunk": {"epsilon": 0.2}}}


class TestParseOverride:
    """Test parse_override."""

    @pytest.mark.parametrize(
        ("assignment", "expected"),
        [
            ("params.eta=0.05", {"params": {"eta": 0.05}}),
            ("seed.relax=true", {"seed": {"relax": True}}),
            ("seed.node=alice", {"seed": {"node": "alice"}}),
            ("sweep.eps_grid=[0, 1]", {"sweep": {"eps_grid": [0, 1]}}),
        ],
    )
    def test_values(self, assignment, expected):
        """Test JSON values with a plain-string fallback."""
        assert ConfigMergeService.parse_override(assignment) == expected

    @pytest.mark.parametrize("assignment", ["params.eta", "=1", "params..eta=1"])
    def test_malformed(self, assignment):
        """Test rejected assignments."""
        with pytest.raises(ConfigurationError, match="key.path=value"):
            ConfigMergeService.parse_override(assignment)


class TestResolve:
    """Test layering."""

    def test_later_layers_win_and_overrides_win_last(self):
        """Test defaults < layers in order < overrides."""
        config = ConfigMergeService.resolve(
            [{"params": {"eta": 0.1}}, {"params": {"eta": 0.2}, "workers": 2}],
            ["params.eta=0.3"],
        )

        assert config.get("params.eta") == 0.3
        assert config.get("workers") == 2
        assert config.get("params.lambda") == 0.25

    def test_override_of_unknown_key(self):
        """Test that overrides are validated like files."""
        with pytest.raises(ConfigurationError, match="sweep.kinds"):
            ConfigMergeService.resolve([], ["sweep.kinds=nudge"])

    def test_grid_mapping_over_unset_grid(self):
        """Test that a {start, stop, steps} grid replaces a null default."""
        config = ConfigMergeService.resolve([{"sweep": {"eps_grid": {"start": 0.0, "stop": 1.0, "steps": 3}}}])

        assert config.grid("sweep.eps_grid") == (0.0, 0.5, 1.0)

    def test_grid_mapping_over_list_default(self):
        """Test that a grid mapping also replaces a list default."""
        config = ConfigMergeService.resolve([{"calibration": {"lambda_grid": {"start": 0.1, "stop": 0.3, "steps": 2}}}])

        assert config.grid("calibration.lambda_grid") == pytest.approx((0.1, 0.3))

    def test_malformed_grid_fails_when_read(self):
        """Test that grid shape errors surface with their path."""
        config = ConfigMergeService.resolve([{"targeting": {"delta_grid": {"start": 0.0}}}])

        with pytest.raises(ConfigurationError) as error:
            config.grid("targeting.delta_grid")

        assert error.value.path == "targeting.delta_grid"


class TestPresetResolution:
    """Test that every named preset layers onto the defaults."""

    @pytest.mark.parametrize("name", ExperimentPresetRepository().names())
    def test_preset_resolves(self, name):
        """Test resolution and grid parsing of one preset."""
        config = ConfigMergeService.resolve([ExperimentPresetRepository().load(name)])

        assert config.get("preset.name") == name
        for path in sorted(GRID_KEYS):
            if config.get(path) is not None:
                assert len(config.grid(path)) >= 1

    @pytest.mark.parametrize("name", ["paper-fig3-nudge-desk", "paper-fig5-targeting-full"])
    def test_preset_grids_are_unit_or_eta_ranges(self, name):
        """Test that preset grids parse to sorted values inside their domains."""
        config = ConfigMergeService.resolve([ExperimentPresetRepository().load(name)])
        section = config.get("command")
        eps = config.grid(f"{section}.eps_grid")

        assert eps[0] == 0.0
        assert eps[-1] == 1.0
        assert list(eps) == sorted(eps)
