"""
Domain Service for layering run configurations.
"""

import copy
import json

from src.shared.domain.exceptions import ConfigurationError
from src.cli.domain.value_objects import DEFAULT_RUN_CONFIG, FREE_FORM_KEYS, RunConfig


class ConfigMergeService:
    """
    Domain Service: Merge configuration layers onto the schema defaults.

    Layers apply in order: defaults, preset, config file, environment, `--set` overrides.
    """

    @staticmethod
    def merge(base: dict, update: dict, prefix: str = "") -> dict:
        """
        Deep-merge `update` into a copy of `base`.

        Args:
            base: Current layer (schema-shaped).
            update: New layer.
            prefix: Dotted path of `base` (for messages).

        Returns:
            dict: Merged copy.

        Raises:
            ConfigurationError: On an unknown key or a scalar given for a section.
        """
        if not isinstance(update, dict):
            raise ConfigurationError("expected a mapping", path=prefix or None)
        merged = copy.deepcopy(base)
        for key, value in update.items():
            path = f"{prefix}.{key}" if prefix else str(key)
            if path in FREE_FORM_KEYS:
                merged[key] = copy.deepcopy(value)
                continue
            if key not in merged:
                raise ConfigurationError("unknown key", path=path)
            if isinstance(merged[key], dict):
                merged[key] = ConfigMergeService.merge(merged[key], value, prefix=path)
            else:
                if isinstance(value, dict):
                    raise ConfigurationError("expected a value, got a mapping", path=path)
                merged[key] = copy.deepcopy(value)
        return merged

    @staticmethod
    def parse_override(assignment: str) -> dict:
        """
        Turn "a.b.c=value" into {"a": {"b": {"c": value}}}.

        The value is read as JSON when possible ("0.5", "true", "[1, 2]") and as a plain string otherwise.

        Raises:
            ConfigurationError: If the assignment has no "=" or an empty key.
        """
        key, separator, raw = assignment.partition("=")
        key = key.strip()
        if not separator or not key or any(not part for part in key.split(".")):
            raise ConfigurationError(f"override '{assignment}' is not of the form key.path=value")
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        for part in reversed(key.split(".")):
            value = {part: value}
        return value

    @staticmethod
    def resolve(layers: list[dict], overrides: list[str] | None = None) -> RunConfig:
        """
        Layer every mapping and override onto the defaults.

        Args:
            layers: Mappings applied in order.
            overrides: "key.path=value" assignments applied last.

        Returns:
            RunConfig: Resolved configuration.
        """
        data = copy.deepcopy(DEFAULT_RUN_CONFIG)
        for layer in layers:
            data = ConfigMergeService.merge(data, layer)
        for assignment in overrides or []:
            data = ConfigMergeService.merge(data, ConfigMergeService.parse_override(assignment))
        return RunConfig(data)
