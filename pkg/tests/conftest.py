import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flagbetti.complexes import Complex, from_facets
from flagbetti.graphs import Graph, from_edges


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edges(n, edges)


def random_complex(rng: random.Random, n: int, nfacets: int = 4) -> Complex:
    """Random non-void complex on n ambient vertices."""
    facets = []
    for _ in range(nfacets):
        size = rng.randint(0, n)
        facets.append(sum(1 << v for v in rng.sample(range(n), size)))
    return from_facets(n, facets)


@pytest.fixture
def rng():
    return random.Random(20240817)
