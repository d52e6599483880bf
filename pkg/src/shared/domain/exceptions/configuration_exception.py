"""
ConfigurationException Module.
"""


class ConfigurationError(ValueError):
    """
    Raised when a run configuration violates its schema.

    Args:
        message: Description of the violation
        path: Dotted path of the offending key (e.g. "diffusion.eta")
    """

    def __init__(self, message: str = "Invalid configuration", path: str | None = None):
        """
        Initialize ConfigurationError.
        """
        self.path = path
        self.message = message if path is None else f"{path}: {message}"
        super().__init__(self.message)


class UnknownPresetError(ConfigurationError):
    """
    Raised when a named experiment preset does not exist.

    Args:
        name: Requested preset name
        available: Names of the known presets
    """

    def __init__(self, name: str, available: list[str]):
        """
        Initialize UnknownPresetError.
        """
        self.name = name
        self.available = sorted(available)
        super().__init__(f"Unknown preset '{name}'. Available presets: {', '.join(self.available)}", path="preset")
