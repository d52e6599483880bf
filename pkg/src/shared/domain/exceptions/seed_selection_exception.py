"""
SeedSelectionException Module.
"""


class NoFullySusceptibleNodeError(LookupError):
    """
    Raised when no node qualifies as the diffusion seed.

    The seed must have susceptibility exactly 1; the caller may relax the
    requirement using the reported maximum.

    Args:
        max_susceptibility: Largest susceptibility present in the graph
    """

    def __init__(self, max_susceptibility: float):
        """
        Initialize NoFullySusceptibleNodeError.
        """
        self.max_susceptibility = max_susceptibility
        self.message = f"No node with susceptibility 1 (maximum present: {max_susceptibility:.6g})."
        super().__init__(self.message)
