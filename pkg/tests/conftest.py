"""Shared instances: one small matroid per family, with promise-respecting weights."""
from typing import Dict, List, Tuple

import pytest
from hypothesis import strategies as st
from hypothesis.strategies import composite

from src.matroid.base import Matroid
from src.matroid.families import (GraphicMatroid, LaminarMatroid, PartitionMatroid,
                                  TransversalMatroid, UniformMatroid)
from src.matroid.weights import WeightedGroundSet


def make_weights(values: List[float]) -> WeightedGroundSet:
    return WeightedGroundSet({e: v for e, v in enumerate(values)})


def triangle() -> GraphicMatroid:
    return GraphicMatroid(3, [(0, 1), (1, 2), (0, 2)])


def family_instances() -> List[Tuple[str, Matroid, WeightedGroundSet]]:
    """Every family at n <= 6, distinct weights inside (max/(8ρ), max]"""
    return [
        ("uniform", UniformMatroid(5, 2), make_weights([10.0, 7.5, 4.0, 2.2, 1.3])),
        ("partition", PartitionMatroid(6, [[0, 1, 2], [3, 4], [5]], [1, 1, 1]),
         make_weights([9.0, 6.0, 2.5, 8.0, 1.1, 4.5])),
        ("graphic", GraphicMatroid(4, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]),
         make_weights([3.0, 9.5, 5.5, 1.6, 7.0])),
        ("laminar", LaminarMatroid(6, [[0, 1], [0, 1, 2, 3], [4, 5]], [1, 2, 1]),
         make_weights([10.0, 3.3, 6.1, 1.7, 8.8, 2.4])),
        ("transversal", TransversalMatroid(5, [[0, 1], [1, 2], [3, 4]]),
         make_weights([6.6, 9.9, 1.4, 4.2, 3.1])),
    ]


@pytest.fixture
def uniform_2_4() -> UniformMatroid:
    return UniformMatroid(4, 2)


@pytest.fixture
def graphic_triangle() -> GraphicMatroid:
    return triangle()


@pytest.fixture
def partition() -> PartitionMatroid:
    return PartitionMatroid(6, [[0, 1, 2], [3, 4], [5]], [1, 1, 1])


@pytest.fixture
def laminar() -> LaminarMatroid:
    return LaminarMatroid(6, [[0, 1], [0, 1, 2, 3], [4, 5]], [1, 2, 1])


@pytest.fixture
def transversal() -> TransversalMatroid:
    # element 4 has no left neighbour: a loop
    return TransversalMatroid(5, [[0, 1], [1, 2], [3]])


@pytest.fixture(params=family_instances(), ids=lambda item: item[0])
def instance(request) -> Tuple[str, Matroid, WeightedGroundSet]:
    return request.param


@composite
def partition_matroids(draw, max_n: int = 7) -> PartitionMatroid:
    n = draw(st.integers(min_value=1, max_value=max_n))
    owners = draw(st.lists(st.integers(min_value=0, max_value=2), min_size=n, max_size=n))
    blocks: Dict[int, List[int]] = {}
    for e, owner in enumerate(owners):
        blocks.setdefault(owner, []).append(e)
    groups = list(blocks.values())
    capacities = [draw(st.integers(min_value=0, max_value=len(g))) for g in groups]
    return PartitionMatroid(n, groups, capacities)


@composite
def graphic_matroids(draw, max_vertices: int = 5, max_edges: int = 7) -> GraphicMatroid:
    vertices = draw(st.integers(min_value=1, max_value=max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, vertices - 1), st.integers(0, vertices - 1)),
                          min_size=1, max_size=max_edges))
    return GraphicMatroid(vertices, edges)


@composite
def transversal_matroids(draw, max_n: int = 6) -> TransversalMatroid:
    n = draw(st.integers(min_value=1, max_value=max_n))
    left = draw(st.lists(st.sets(st.integers(0, n - 1), max_size=n), min_size=1, max_size=4))
    return TransversalMatroid(n, [sorted(adj) for adj in left])
