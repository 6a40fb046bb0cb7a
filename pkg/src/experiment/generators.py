"""Random instances for every family, and the weight schemes that populate them."""
import logging
import math
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from src.config.experiment import ExperimentConfig
from src.errors import InfeasibleParametersError
from src.matroid.base import Matroid
from src.matroid.families import (GraphicMatroid, LaminarMatroid, PartitionMatroid,
                                  TransversalMatroid, UniformMatroid)
from src.matroid.io import parse_instance, parse_weights
from src.matroid.weights import WeightedGroundSet
from src.secretary.randomness import trial_streams

logger = logging.getLogger(__name__)

W_MAX = 100.0
INSTANCE_SALT = 1


def default_k(family: str, n: int) -> int:
    """Family parameter when none is given: rank, block/set/left-vertex count, or vertex count"""
    if family == "graphic":
        return max(3, math.ceil(math.sqrt(2 * n)) + 1)
    return max(1, n // 3)


def _graphic(n: int, vertices: int, rng: np.random.Generator) -> GraphicMatroid:
    if vertices < 2 or n > vertices * (vertices - 1) // 2:
        raise InfeasibleParametersError(f"a simple graph on {vertices} vertices cannot have {n} edges")
    graph = nx.gnm_random_graph(vertices, n, seed=int(rng.integers(0, 2 ** 32)))
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges())
    return GraphicMatroid(vertices, edges)


def _partition(n: int, blocks: int, rng: np.random.Generator) -> PartitionMatroid:
    if not 1 <= blocks <= n:
        raise InfeasibleParametersError(f"cannot split {n} elements into {blocks} non-empty blocks")
    order = rng.permutation(n)
    owner = np.concatenate([np.arange(blocks), rng.integers(0, blocks, n - blocks)])
    groups: List[List[int]] = [[] for _ in range(blocks)]
    for e, b in zip(order, owner):
        groups[int(b)].append(int(e))
    capacities = [int(rng.integers(1, len(g) + 1)) for g in groups]
    return PartitionMatroid(n, groups, capacities)


def _laminar(n: int, count: int, rng: np.random.Generator) -> LaminarMatroid:
    """Members picked from the intervals of a random recursive bisection of a permutation"""
    order = [int(e) for e in rng.permutation(n)]
    intervals: List[Tuple[int, int]] = []
    stack = [(0, n)]
    while stack:
        lo, hi = stack.pop()
        intervals.append((lo, hi))
        if hi - lo > 1:
            cut = int(rng.integers(lo + 1, hi))
            stack.extend([(lo, cut), (cut, hi)])
    if not 1 <= count <= len(intervals):
        raise InfeasibleParametersError(f"a laminar family on {n} elements has at most {len(intervals)} sets")
    chosen = sorted(int(j) for j in rng.choice(len(intervals), size=count, replace=False))
    sets = [order[intervals[j][0]:intervals[j][1]] for j in chosen]
    capacities = [int(rng.integers(1, len(s) + 1)) for s in sets]
    return LaminarMatroid(n, sets, capacities)


def _transversal(n: int, left: int, rng: np.random.Generator) -> TransversalMatroid:
    if left < 1:
        raise InfeasibleParametersError("a transversal instance needs at least one left vertex")
    adjacency = []
    for _ in range(left):
        size = int(rng.integers(1, min(n, 4) + 1))
        adjacency.append(sorted(int(e) for e in rng.choice(n, size=size, replace=False)))
    return TransversalMatroid(n, adjacency)


def generate_instance(family: str, n: int, k: Optional[int], rng: np.random.Generator) -> Matroid:
    if n < 1:
        raise InfeasibleParametersError(f"n must be positive, got {n}")
    k = default_k(family, n) if k is None else k
    if family == "uniform":
        return UniformMatroid(n, k)
    if family == "partition":
        return _partition(n, k, rng)
    if family == "graphic":
        return _graphic(n, k, rng)
    if family == "laminar":
        return _laminar(n, k, rng)
    if family == "transversal":
        return _transversal(n, k, rng)
    raise InfeasibleParametersError(f"unknown family {family!r}")


def spread_exponents(rho: int, base: float) -> int:
    """Largest j with base^j < 8ρ, so W/base^j stays above the promise floor W/(8ρ)"""
    j = 0
    while base ** (j + 1) < 8 * rho:
        j += 1
    return j


def generate_weights(scheme: str, m: Matroid, rng: np.random.Generator, base: float = 2.0,
                     path: Optional[str] = None) -> WeightedGroundSet:
    """Weights in (W/(8ρ), W] with W = 100, so the tight promise always holds"""
    if scheme == "from-file":
        return parse_weights(path, m.n)
    rho = max(m.full_rank(), 1)
    ids = range(m.n)
    if scheme == "uniform-random":
        floor = W_MAX / (8 * rho)
        draws = rng.random(m.n)
        return WeightedGroundSet({e: W_MAX - (W_MAX - floor) * float(u) for e, u in zip(ids, draws)})
    top = spread_exponents(rho, base)
    if scheme == "exponential-spread":
        exponents = rng.integers(0, top + 1, m.n)
        return WeightedGroundSet({e: W_MAX / base ** int(j) for e, j in zip(ids, exponents)})
    if scheme == "adversarial-geometric":
        # lighter ids first: ascending-id arrival sees weights climb in every cycle
        return WeightedGroundSet({e: W_MAX / base ** (top - e % (top + 1)) for e in ids})
    raise InfeasibleParametersError(f"unknown weight scheme {scheme!r}")


def build_problem(config: ExperimentConfig) -> Tuple[Matroid, WeightedGroundSet]:
    """The instance and weights for a whole run: fixed by the root seed, shared by every trial"""
    streams = trial_streams(config.seed, 0, salt=INSTANCE_SALT)
    if config.instance_path:
        m = parse_instance(config.instance_path)
    else:
        m = generate_instance(config.family, config.n, config.k, streams["sample"])
    w = generate_weights(config.weight_scheme, m, streams["weights"], config.base, config.weights_path)
    logger.info("instance %s, weights %s, max weight %g", m.describe(), config.weight_scheme, w.max_weight())
    return m, w
