from pathlib import Path

import pytest

from hyclique import Hypergraph

DATA = Path(__file__).parent / "data"

FANO_EDGES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6),
              (2, 3, 6), (2, 4, 5)]


def star_clique(n: int, petals: int) -> Hypergraph:
    """All edges share vertex 0; petals are pairwise disjoint."""
    edges = []
    for i in range(petals):
        start = 1 + i * (n - 1)
        edges.append((0,) + tuple(range(start, start + n - 1)))
    return Hypergraph.from_edges(n, 1 + petals * (n - 1), edges)


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def fano() -> Hypergraph:
    return Hypergraph.from_edges(3, 7, FANO_EDGES)


@pytest.fixture
def triangle() -> Hypergraph:
    return Hypergraph.from_edges(2, 3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def four_edge() -> Hypergraph:
    """4-uniform clique whose edges 2 and 3 avoid vertex 0 and share 3 vertices."""
    return Hypergraph.from_edges(
        4, 10, [(0, 1, 2, 3), (0, 4, 5, 6), (1, 4, 7, 8), (1, 4, 7, 9)])


@pytest.fixture
def add_two() -> Hypergraph:
    """4-uniform clique where E({0}) avoids the core {1,2} of edges 0 and 1,
    forcing the two-vertex amplification branch."""
    return Hypergraph.from_edges(
        4, 8, [(1, 2, 3, 4), (1, 2, 5, 6), (0, 3, 5, 7), (0, 4, 6, 7)])


@pytest.fixture
def exhaustible() -> Hypergraph:
    """4-uniform clique where the three edges avoiding vertex 9 intersect
    pairwise in exactly one vertex (inside the (4,2) spectrum)."""
    return Hypergraph.from_edges(
        4, 10, [(0, 1, 2, 3), (0, 4, 5, 6), (3, 4, 7, 8), (0, 3, 4, 9)])
