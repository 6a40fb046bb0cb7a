"""The five concrete matroid families.

Every family only has to answer independence; rank and span come from the
base class. Counting families (uniform, partition, laminar) and the graphic
family scan incrementally; the transversal family runs a bipartite matching
per query.
"""
from collections import Counter
from typing import Dict, FrozenSet, List, Sequence, Tuple

import networkx as nx
from networkx.algorithms import bipartite
from networkx.utils import UnionFind

from src.errors import InfeasibleParametersError
from src.matroid.base import Matroid


class UniformMatroid(Matroid):
    """U(k, n): every set of at most k elements is independent"""

    family = "uniform"

    def __init__(self, n: int, k: int):
        super().__init__(n)
        if k < 0:
            raise InfeasibleParametersError(f"uniform matroid needs k >= 0, got {k}")
        self.k = k

    def _independent(self, elements: FrozenSet[int]) -> bool:
        return len(elements) <= self.k

    def _greedy(self, ordered: Sequence[int]) -> List[int]:
        return list(ordered[:self.k])

    def describe(self) -> str:
        return f"uniform(n={self.n}, k={self.k})"


class PartitionMatroid(Matroid):
    """Blocks partition the ground set; at most capacity[j] elements from block j"""

    family = "partition"

    def __init__(self, n: int, blocks: Sequence[Sequence[int]], capacities: Sequence[int]):
        super().__init__(n)
        if len(blocks) != len(capacities):
            raise InfeasibleParametersError("one capacity per block is required")
        self.blocks: Tuple[FrozenSet[int], ...] = tuple(frozenset(b) for b in blocks)
        self.capacities: Tuple[int, ...] = tuple(int(c) for c in capacities)
        self._block_of: Dict[int, int] = {}
        for j, block in enumerate(self.blocks):
            if self.capacities[j] < 0:
                raise InfeasibleParametersError(f"block {j} has negative capacity")
            for e in block:
                self.check_element(e)
                if e in self._block_of:
                    raise InfeasibleParametersError(f"element {e} appears in blocks {self._block_of[e]} and {j}")
                self._block_of[e] = j
        missing = self.ground_set - self._block_of.keys()
        if missing:
            raise InfeasibleParametersError(f"elements {sorted(missing)} belong to no block")

    def _independent(self, elements: FrozenSet[int]) -> bool:
        counts = Counter(self._block_of[e] for e in elements)
        return all(count <= self.capacities[j] for j, count in counts.items())

    def _greedy(self, ordered: Sequence[int]) -> List[int]:
        used = Counter()
        kept = []
        for e in ordered:
            j = self._block_of[e]
            if used[j] < self.capacities[j]:
                used[j] += 1
                kept.append(e)
        return kept

    def describe(self) -> str:
        return f"partition(n={self.n}, blocks={len(self.blocks)})"


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element i is edge i, forests are independent"""

    family = "graphic"

    def __init__(self, n_vertices: int, edges: Sequence[Tuple[int, int]]):
        super().__init__(len(edges))
        self.n_vertices = n_vertices
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise InfeasibleParametersError(f"edge {i} ({u}, {v}) leaves vertex range [0, {n_vertices})")
        self.edges: Tuple[Tuple[int, int], ...] = tuple((int(u), int(v)) for u, v in edges)

    def _greedy(self, ordered: Sequence[int]) -> List[int]:
        forest = UnionFind()
        kept = []
        for e in ordered:
            u, v = self.edges[e]
            if forest[u] != forest[v]:
                forest.union(u, v)
                kept.append(e)
        return kept

    def _independent(self, elements: FrozenSet[int]) -> bool:
        return len(self._greedy(sorted(elements))) == len(elements)

    def describe(self) -> str:
        return f"graphic(vertices={self.n_vertices}, edges={self.n})"


class LaminarMatroid(Matroid):
    """Capacities on a laminar family: |I ∩ A| <= capacity(A) for every member A"""

    family = "laminar"

    def __init__(self, n: int, sets: Sequence[Sequence[int]], capacities: Sequence[int]):
        super().__init__(n)
        if len(sets) != len(capacities):
            raise InfeasibleParametersError("one capacity per laminar set is required")
        self.sets: Tuple[FrozenSet[int], ...] = tuple(self.check_subset(s) for s in sets)
        self.capacities: Tuple[int, ...] = tuple(int(c) for c in capacities)
        if any(c < 0 for c in self.capacities):
            raise InfeasibleParametersError("laminar capacities must be non-negative")
        for a in range(len(self.sets)):
            for b in range(a + 1, len(self.sets)):
                first, second = self.sets[a], self.sets[b]
                if first & second and not (first <= second or second <= first):
                    raise InfeasibleParametersError(f"sets {a} and {b} cross; the family is not laminar")
        self._containing: Dict[int, Tuple[int, ...]] = {
            e: tuple(j for j, s in enumerate(self.sets) if e in s) for e in self.ground_set
        }

    def _independent(self, elements: FrozenSet[int]) -> bool:
        counts = Counter(j for e in elements for j in self._containing[e])
        return all(count <= self.capacities[j] for j, count in counts.items())

    def _greedy(self, ordered: Sequence[int]) -> List[int]:
        used = Counter()
        kept = []
        for e in ordered:
            members = self._containing[e]
            if all(used[j] < self.capacities[j] for j in members):
                for j in members:
                    used[j] += 1
                kept.append(e)
        return kept

    def describe(self) -> str:
        return f"laminar(n={self.n}, sets={len(self.sets)})"


class TransversalMatroid(Matroid):
    """Partial transversals: a set is independent iff it matches into distinct left vertices"""

    family = "transversal"

    def __init__(self, n: int, left: Sequence[Sequence[int]]):
        super().__init__(n)
        self.left: Tuple[FrozenSet[int], ...] = tuple(self.check_subset(adj) for adj in left)
        self._neighbours: Dict[int, List[int]] = {e: [] for e in self.ground_set}
        for j, adjacency in enumerate(self.left):
            for e in adjacency:
                self._neighbours[e].append(j)

    def _independent(self, elements: FrozenSet[int]) -> bool:
        if not elements:
            return True
        if any(not self._neighbours[e] for e in elements):
            return False
        graph = nx.Graph()
        right = [("element", e) for e in elements]
        graph.add_nodes_from(right, bipartite=0)
        for e in elements:
            for j in self._neighbours[e]:
                graph.add_edge(("element", e), ("left", j))
        matching = bipartite.hopcroft_karp_matching(graph, top_nodes=right)
        return sum(1 for node in right if node in matching) == len(elements)

    def describe(self) -> str:
        return f"transversal(n={self.n}, left={len(self.left)})"
