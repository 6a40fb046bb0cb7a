"""Phase-2 arrival orders for the harness."""
from typing import FrozenSet, List, Optional, Sequence

import numpy as np

from src.matroid.weights import WeightedGroundSet
from src.secretary.protocol import Arrange


def monotone_order(w: WeightedGroundSet, increasing: bool) -> Arrange:
    def arrange(sample: FrozenSet[int], remaining: List[int]) -> Sequence[int]:
        return sorted(remaining, key=w.key, reverse=not increasing)
    return arrange


def shuffled_order(rng: np.random.Generator) -> Arrange:
    def arrange(sample: FrozenSet[int], remaining: List[int]) -> Sequence[int]:
        return [remaining[i] for i in rng.permutation(len(remaining))]
    return arrange


def arrangement_for(order: str, w: WeightedGroundSet) -> Optional[Arrange]:
    """None for orders that are not a fixed rule over the remaining elements"""
    if order == "increasing":
        return monotone_order(w, increasing=True)
    if order == "decreasing":
        return monotone_order(w, increasing=False)
    return None
