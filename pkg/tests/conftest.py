import sys
from pathlib import Path

import pytest

from zerolap import Hypergraph

sys.path.insert(0, str(Path(__file__).parent))

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def single_edge(k: int) -> Hypergraph:
    return Hypergraph(k, k, (tuple(range(1, k + 1)),))


@pytest.fixture
def chain() -> Hypergraph:
    """Three 3-edges sharing single vertices: the 13-tripartition instance."""
    return Hypergraph(3, 7, ((1, 2, 3), (3, 4, 5), (5, 6, 7)))


@pytest.fixture
def k4_overlap() -> Hypergraph:
    """The 4-uniform instance with exactly three even-bipartitions."""
    return Hypergraph(4, 6, ((1, 2, 3, 4), (1, 3, 5, 6), (1, 2, 3, 6)))


@pytest.fixture
def k3_complete4() -> Hypergraph:
    """All four 3-subsets of a 4-set; admits no head-mass bipartition."""
    return Hypergraph(3, 4, ((1, 2, 3), (2, 3, 4), (1, 3, 4), (1, 2, 4)))
