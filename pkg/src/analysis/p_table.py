"""Span probabilities p_(e,i) = Pr[e ∈ span(S ∩ C_(>=i)) | e ∉ S], S a half-sample.

Conditioning on e ∉ S is done by leaving e out of the sampled universe;
membership coins are independent, so the two are the same.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from src.buckets.classing import WeightClassing
from src.config.settings import CONFIG
from src.errors import EnumerationBudgetError
from src.matroid.base import Matroid
from src.matroid.weights import WeightedGroundSet

logger = logging.getLogger(__name__)

Probability = Union[Fraction, float]


@dataclass
class SpanProbabilityTable:
    h: int
    values: Dict[Tuple[int, int], Probability]
    mode: str = "exact"
    trials: Optional[int] = None
    seed: Optional[int] = None
    stderr: Dict[Tuple[int, int], float] = field(default_factory=dict)

    def p(self, e: int, i: int) -> Probability:
        if i <= 0:
            return Fraction(1) if self.mode == "exact" else 1.0
        return self.values[(e, i)]

    __call__ = p

    def sigma(self, e: int, i: int) -> float:
        if i <= 0:
            return 0.0
        return self.stderr.get((e, i), 0.0)

    def elements(self) -> List[int]:
        return sorted({e for e, _ in self.values})

    def monotonicity_violations(self) -> List[Tuple[int, int]]:
        """(e, i) with p_(e,i) < p_(e,i+1)"""
        bad = []
        for e in self.elements():
            for i in range(0, self.h):
                if self.p(e, i) < self.p(e, i + 1):
                    bad.append((e, i))
        return bad


def _universe(w: WeightedGroundSet, classing: WeightClassing) -> Dict[int, int]:
    return classing.classify(w)


def exact_p_table(m: Matroid, w: WeightedGroundSet, classing: WeightClassing,
                  budget: Optional[int] = None) -> SpanProbabilityTable:
    budget = CONFIG['P_TABLE_BUDGET'] if budget is None else budget
    classes = _universe(w, classing)
    if len(classes) > budget:
        raise EnumerationBudgetError(
            f"{len(classes)} classed elements exceed the exact p-table budget of {budget}; use estimate_p_table")
    values: Dict[Tuple[int, int], Fraction] = {}
    for e in sorted(m.ground_set):
        for i in range(1, classing.h + 1):
            pool = sorted(x for x, c in classes.items() if c >= i and x != e)
            hits = 0
            for mask in range(1 << len(pool)):
                subset = frozenset(x for bit, x in enumerate(pool) if mask >> bit & 1)
                hits += m.span_contains(subset, e)
            values[(e, i)] = Fraction(hits, 1 << len(pool))
    logger.info("exact p-table over %d elements and %d classes", m.n, classing.h)
    return SpanProbabilityTable(classing.h, values)


def estimate_p_table(m: Matroid, w: WeightedGroundSet, classing: WeightClassing, trials: int,
                     rng: np.random.Generator, seed: Optional[int] = None) -> SpanProbabilityTable:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    classes = _universe(w, classing)
    classed = sorted(classes)
    hits: Dict[Tuple[int, int], int] = {(e, i): 0 for e in m.ground_set for i in range(1, classing.h + 1)}
    for _ in range(trials):
        coins = rng.random(len(classed)) < 0.5
        sample = [x for x, hit in zip(classed, coins) if hit]
        for i in range(1, classing.h + 1):
            layer = frozenset(x for x in sample if classes[x] >= i)
            for e in m.ground_set:
                hits[(e, i)] += m.span_contains(layer - {e}, e)
    values = {key: count / trials for key, count in hits.items()}
    stderr = {key: math.sqrt(v * (1 - v) / trials) for key, v in values.items()}
    table = SpanProbabilityTable(classing.h, values, mode="monte-carlo", trials=trials, seed=seed, stderr=stderr)
    flagged = table.monotonicity_violations()
    if flagged:
        logger.info("estimated p-table is non-monotone at %d entries (sampling noise)", len(flagged))
    return table
