"""
CLI Domain Value Object - Run Manifest.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class RunManifest:
    """
    Value Object: Provenance of one run.

    Attributes:
        command: Subcommand name.
        config: Fully resolved configuration.
        input_digests: Input file path -> "sha256:<hex>".
        output_digests: Output file name -> "sha256:<hex>".
        master_seed: Seed the run's random streams derive from.
        version: Tool version.
        duration_seconds: Wall-clock duration.
        preset_note: Provenance remark of a preset, if one was used.
    """

    command: str
    config: dict
    input_digests: dict[str, str]
    output_digests: dict[str, str]
    master_seed: int | None
    version: str
    duration_seconds: float
    preset_note: str | None = None
    started_at: str = field(default="")

    def to_dict(self) -> dict:
        """Convert to the manifest document."""
        return {
            "command": self.command,
            "config": self.config,
            "inputs": dict(sorted(self.input_digests.items())),
            "outputs": dict(sorted(self.output_digests.items())),
            "master_seed": self.master_seed,
            "version": self.version,
            "duration_seconds": round(self.duration_seconds, 3),
            "preset_note": self.preset_note,
            "started_at": self.started_at,
        }
