import math
from typing import Optional, Sequence

import numpy as np

from src.matroid.weights import WeightedGroundSet


def classical_secretary_baseline(w: WeightedGroundSet, arrivals: Sequence[int], n: Optional[int] = None,
                                 rng: Optional[np.random.Generator] = None) -> Optional[int]:
    """Observe the first ⌊n/e⌋ arrivals, then take the first one beating all of them.

    With `rng` the arrivals are shuffled first; otherwise they are taken to be
    in uniformly random order already.
    """
    order = list(arrivals)
    if rng is not None:
        order = [order[i] for i in rng.permutation(len(order))]
    n = len(order) if n is None else n
    cutoff = math.floor(n / math.e)
    best_seen = None
    for position, e in enumerate(order):
        if position < cutoff:
            if best_seen is None or w.key(e) > w.key(best_seen):
                best_seen = e
        elif best_seen is None or w.key(e) > w.key(best_seen):
            return e
    return None
