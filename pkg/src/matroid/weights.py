import math
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

from src.errors import InvalidQueryError
from src.matroid.base import Matroid


class WeightedGroundSet:
    """Strictly positive weights; ties are broken by element id so the order is total"""

    def __init__(self, weights: Mapping[int, float]):
        self._weights: Dict[int, float] = {}
        for e, w in weights.items():
            w = float(w)
            if not math.isfinite(w) or w <= 0:
                raise ValueError(f"weight of element {e} must be a positive real, got {w}")
            self._weights[int(e)] = w

    def __getitem__(self, e: int) -> float:
        try:
            return self._weights[e]
        except KeyError:
            raise InvalidQueryError(f"element {e!r} has no weight") from None

    def __contains__(self, e: int) -> bool:
        return e in self._weights

    def __len__(self) -> int:
        return len(self._weights)

    def __iter__(self):
        return iter(self._weights)

    def items(self):
        return self._weights.items()

    def key(self, e: int) -> Tuple[float, int]:
        """Lexicographic (weight, id): the comparison used everywhere"""
        return (self[e], e)

    def descending(self, elements: Iterable[int]) -> List[int]:
        return sorted(elements, key=self.key, reverse=True)

    def total(self, elements: Iterable[int]) -> float:
        return math.fsum(self[e] for e in elements)

    def heaviest(self, elements: Optional[Iterable[int]] = None) -> Optional[int]:
        pool = list(self._weights if elements is None else elements)
        return max(pool, key=self.key) if pool else None

    def max_weight(self) -> float:
        return max(self._weights.values())


def greedy_max_weight(m: Matroid, w: WeightedGroundSet,
                      candidates: Optional[Iterable[int]] = None) -> FrozenSet[int]:
    """Max-weight independent subset of `candidates` (OPT for the whole ground set)"""
    pool = m.ground_set if candidates is None else m.check_subset(candidates)
    return frozenset(m.basis_of(w.descending(pool)))
