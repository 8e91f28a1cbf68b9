# conftest.py
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graph_core import SimplicialGraph

settings.register_profile(
    "graphs",
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("graphs")

GOLDEN_DIR = Path(__file__).parent / "golden"


def build(vertices: str, edges: str = "") -> SimplicialGraph:
    """build("abcd", "ab bc cd") is P4; single-character labels only."""
    return SimplicialGraph.from_edges(list(vertices), [tuple(pair) for pair in edges.split()])


@st.composite
def simplicial_graphs(draw, min_vertices: int = 1, max_vertices: int = 8, connected: bool = False) -> SimplicialGraph:
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    labels = [f"x{i}" for i in range(n)]
    edges = set()
    if connected:
        # random spanning tree first
        for i in range(1, n):
            edges.add(frozenset((labels[draw(st.integers(min_value=0, max_value=i - 1))], labels[i])))
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges.update(frozenset(pair) for pair in draw(st.lists(st.sampled_from(pairs), unique=True)))
    order = draw(st.permutations(labels))
    return SimplicialGraph(tuple(order), frozenset(edges))


@pytest.fixture
def golden():
    """Read a golden file by name."""
    return lambda name: (GOLDEN_DIR / name).read_text(encoding="utf-8")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full acceptance corpora")
