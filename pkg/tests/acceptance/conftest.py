"""
Shared fixtures for the desk-scale acceptance checks.
"""

import pytest

from src.experiments.domain.services import SyntheticNetworkService


@pytest.fixture(scope="module")
def desk_network():
    """2,000-node bidirected scale-free network with scored susceptibilities and shuffled ids."""
    return SyntheticNetworkService.synthetic_scale_free_network(
        2000, 5, seed=1, susceptibility="scored", shuffle_ids=True
    )
