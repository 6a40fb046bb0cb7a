"""Independence/rank/span oracle contract shared by every matroid family.

Ranks follow the greedy axiom: scan a subset, keep an element whenever the
kept set stays independent. Families override `_greedy` with an incremental
scan when they have one (union-find, capacity counters).
"""
import logging
from abc import ABC, abstractmethod
from typing import Dict, FrozenSet, Iterable, List, Protocol, Sequence

from src.config.settings import CONFIG
from src.errors import InvalidQueryError

logger = logging.getLogger(__name__)


class IndependenceOracle(Protocol):
    """What algorithms may ask: matroids, minors and audit wrappers all answer it"""

    def is_independent(self, subset: Iterable[int]) -> bool: ...

    def rank(self, subset: Iterable[int]) -> int: ...

    def span_contains(self, subset: Iterable[int], e: int) -> bool: ...


class Matroid(ABC):
    """A matroid on the ground set {0, ..., n-1}; immutable after construction"""

    family = "abstract"

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"ground set size must be non-negative, got {n}")
        self._n = n
        self._ground = frozenset(range(n))
        self._rank_memo: Dict[FrozenSet[int], int] = {}

    @property
    def n(self) -> int:
        return self._n

    @property
    def ground_set(self) -> FrozenSet[int]:
        return self._ground

    def check_subset(self, subset: Iterable[int]) -> FrozenSet[int]:
        elements = frozenset(subset)
        if not elements <= self._ground:
            unknown = sorted(elements - self._ground, key=repr)
            raise InvalidQueryError(f"unknown element ids {unknown} for ground set of size {self._n}")
        return elements

    def check_element(self, e: int) -> int:
        if e not in self._ground:
            raise InvalidQueryError(f"unknown element id {e!r} for ground set of size {self._n}")
        return e

    @abstractmethod
    def _independent(self, elements: FrozenSet[int]) -> bool:
        """Family-specific independence test on validated ids"""

    def _greedy(self, ordered: Sequence[int]) -> List[int]:
        kept: List[int] = []
        current: FrozenSet[int] = frozenset()
        for e in ordered:
            candidate = current | {e}
            if self._independent(candidate):
                kept.append(e)
                current = candidate
        return kept

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self._independent(self.check_subset(subset))

    def basis_of(self, ordered: Sequence[int]) -> List[int]:
        """Greedy scan of `ordered`: the elements kept, in scan order"""
        self.check_subset(ordered)
        return self._greedy(list(ordered))

    def rank(self, subset: Iterable[int]) -> int:
        elements = self.check_subset(subset)
        cached = self._rank_memo.get(elements)
        if cached is not None:
            return cached
        value = len(self._greedy(sorted(elements)))
        if len(self._rank_memo) >= CONFIG['RANK_MEMO_SIZE']:
            self._rank_memo.clear()
        self._rank_memo[elements] = value
        return value

    def span_contains(self, subset: Iterable[int], e: int) -> bool:
        elements = self.check_subset(subset)
        self.check_element(e)
        if e in elements:
            return True
        return self.rank(elements | {e}) == self.rank(elements)

    def full_rank(self) -> int:
        return self.rank(self._ground)

    def describe(self) -> str:
        return f"{self.family}(n={self._n})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state['_rank_memo'] = {}
        return state

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()}>"
