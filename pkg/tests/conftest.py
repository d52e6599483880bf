"""
Shared pytest fixtures for tests.
"""

import os

import numpy as np
import pytest

from src.graph.domain.entities import DirectedGraph
from src.experiments.domain.services import SyntheticNetworkService


def write_text(path, content: str):
    """Write a small input file and return its path."""
    path.write_text(content, encoding="utf-8")
    return path


@pytest.fixture
def path_graph():
    """Directed path 0 -> 1 -> 2, every node fully susceptible."""
    return DirectedGraph.from_edges(3, [0, 1], [1, 2], susceptibility=[1.0, 1.0, 1.0])


@pytest.fixture
def star_graph():
    """Hub 0 pointing at four leaves with mixed susceptibility."""
    return DirectedGraph.from_edges(5, [0, 0, 0, 0], [1, 2, 3, 4], susceptibility=[1.0, 0.2, 0.9, 0.5, 0.7])


@pytest.fixture
def two_component_graph():
    """Bidirected triangle {0, 1, 2} plus a separate edge 3 -> 4."""
    sources = [0, 1, 1, 2, 2, 0, 3]
    targets = [1, 0, 2, 1, 0, 2, 4]
    return DirectedGraph.from_edges(5, sources, targets, susceptibility=[1.0, 0.5, 0.5, 1.0, 0.5])


@pytest.fixture
def small_scale_free_graph():
    """200-node bidirected Barabasi-Albert graph with uniform susceptibilities and a full seed at 0."""
    graph = SyntheticNetworkService.synthetic_scale_free_network(200, 3, seed=7, susceptibility="uniform")
    values = np.array(graph.susceptibility)
    values[0] = 1.0
    return graph.with_susceptibility(values)


@pytest.fixture
def edge_list_file(tmp_path):
    """Edge list with a comment, a self-loop and a duplicate edge."""
    return write_text(tmp_path / "edges.txt", "# follower graph\nalice bob\nbob carol\nalice bob\ncarol carol\ncarol alice\n")


@pytest.fixture
def susceptibility_file(tmp_path):
    """Susceptibility file covering the three users of `edge_list_file`."""
    return write_text(tmp_path / "susceptibility.txt", "alice 1.0\nbob 0.5\ncarol 0.25\n")


def paper_data_dir():
    """Directory with the full-scale datasets, if configured."""
    return os.environ.get("MISINFO_PAPER_DATA")
