"""
Per-run random stream derivation.

Run i of a batch with master seed m draws from
SeedSequence(entropy=m, spawn_key=(i, stream)): a counter-based split, so
every run is reproducible in isolation and independent of worker scheduling.
"""

import numpy as np

DIFFUSION_STREAM = 0
TARGET_STREAM = 1


def derive_run_seed(master_seed: int, run_index: int, stream: int = DIFFUSION_STREAM) -> np.random.SeedSequence:
    """
    Seed of one run's random stream.

    Args:
        master_seed: Batch seed.
        run_index: 0-based run counter.
        stream: DIFFUSION_STREAM for edge draws, TARGET_STREAM for random prebunk targets.

    Returns:
        np.random.SeedSequence: Seed for `np.random.default_rng`.
    """
    return np.random.SeedSequence(entropy=int(master_seed), spawn_key=(int(run_index), int(stream)))
