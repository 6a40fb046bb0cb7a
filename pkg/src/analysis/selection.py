"""Selection probabilities Pr[e ∈ T]: exact enumeration and Monte Carlo.

The exact path walks every sample S (2^n of them) and both parities, for each
distinct bucketing of interest, against one fixed arrival order. Random
bucketings are handled by mixing per-bucketing tables with their (τ, Δ)
probabilities, so one enumeration serves every mode.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.buckets.bucketing import Bucketing, all_params, make_bucketing, tau_max
from src.buckets.classing import WeightClassing
from src.config.settings import CONFIG
from src.errors import EnumerationBudgetError, SecretaryError
from src.matroid.base import Matroid
from src.matroid.weights import WeightedGroundSet
from src.secretary.bucketing_algorithm import BucketingAlgorithm, Parity
from src.secretary.full_algorithm import LogLogAlgorithm
from src.secretary.protocol import AidedPromise, run_sample_based, run_sbmsp
from src.secretary.randomness import TrialStreams

logger = logging.getLogger(__name__)

_CONTEXT: Dict[str, object] = {}


def bucketing_mixture(h: int, taus: Optional[Iterable[int]] = None) -> Dict[Bucketing, Fraction]:
    """Distribution over distinct bucketings induced by a uniform τ (restricted to `taus`) and uniform Δ"""
    allowed = sorted(set(range(tau_max(h) + 1) if taus is None else taus))
    if not allowed:
        raise ValueError("at least one tau is required")
    mixture: Dict[Bucketing, Fraction] = {}
    for params in all_params(h):
        if params.tau not in allowed:
            continue
        weight = Fraction(1, len(allowed)) / 2 ** params.tau
        bucketing = make_bucketing(h, params)
        mixture[bucketing] = mixture.get(bucketing, Fraction(0)) + weight
    return mixture


@dataclass
class SelectionTable:
    """Exact Pr[e ∈ T] per bucketing, for one arrival order"""
    order: Tuple[int, ...]
    probabilities: Dict[Bucketing, Dict[int, Fraction]]
    runs: int

    def for_bucketing(self, bucketing: Bucketing) -> Dict[int, Fraction]:
        return self.probabilities[bucketing]

    def mixture(self, weights: Dict[Bucketing, Fraction]) -> Dict[int, Fraction]:
        mixed = {e: Fraction(0) for e in self.order}
        for bucketing, weight in weights.items():
            for e, p in self.probabilities[bucketing].items():
                mixed[e] += weight * p
        return mixed


def _init_worker(m: Matroid, w: WeightedGroundSet, classing: WeightClassing,
                 bucketings: Sequence[Bucketing], order: Sequence[int]) -> None:
    _CONTEXT.update(m=m, w=w, classing=classing, bucketings=tuple(bucketings), order=tuple(order))


def _tally(m: Matroid, w: WeightedGroundSet, classing: WeightClassing, bucketings: Sequence[Bucketing],
           order: Sequence[int], masks: range) -> Tuple[List[Counter], int]:
    elements = sorted(order)
    counts = [Counter() for _ in bucketings]
    violations = 0
    for mask in masks:
        sample = frozenset(e for bit, e in enumerate(elements) if mask >> bit & 1)
        arrivals = [e for e in order if e not in sample]
        for index, bucketing in enumerate(bucketings):
            for parity in Parity:
                alg = BucketingAlgorithm(classing, bucketing, parity=parity)
                outcome = run_sample_based(alg, m, w, sample, arrivals)
                violations += outcome.audit_violations
                counts[index].update(outcome.selected)
    return counts, violations


def _count_masks(masks: range) -> Tuple[List[Counter], int]:
    return _tally(_CONTEXT["m"], _CONTEXT["w"], _CONTEXT["classing"], _CONTEXT["bucketings"], _CONTEXT["order"],
                  masks)


def _chunks(total: int, pieces: int) -> List[range]:
    size = max(1, -(-total // pieces))
    return [range(start, min(start + size, total)) for start in range(0, total, size)]


def exact_selection_table(m: Matroid, w: WeightedGroundSet, promise: AidedPromise, order: Sequence[int],
                          bucketings: Optional[Iterable[Bucketing]] = None, workers: int = 1,
                          budget: Optional[int] = None) -> SelectionTable:
    budget = CONFIG['EXACT_BUDGET_N'] if budget is None else budget
    if m.n > budget:
        raise EnumerationBudgetError(f"exact enumeration over n={m.n} exceeds the budget of {budget}")
    order = tuple(order)
    if sorted(order) != sorted(m.ground_set):
        raise ValueError("arrival order must be a permutation of the ground set")
    classing = promise.classing()
    if bucketings is None:
        bucketings = bucketing_mixture(classing.h)
    bucketings = list(dict.fromkeys(bucketings))
    context = (m, w, classing, bucketings, order)
    total = 1 << m.n
    if workers > 1 and total > 1:
        with Pool(workers, initializer=_init_worker, initargs=context) as pool:
            parts = pool.map(_count_masks, _chunks(total, workers * 4))
    else:
        parts = [_tally(m, w, classing, bucketings, order, range(total))]
    counts = [Counter() for _ in bucketings]
    violations = 0
    for part_counts, part_violations in parts:
        violations += part_violations
        for merged, part in zip(counts, part_counts):
            merged.update(part)
    if violations:
        raise SecretaryError(f"{violations} oracle queries touched unrevealed elements during enumeration")
    cells = total * len(Parity)
    probabilities = {
        bucketing: {e: Fraction(counts[index][e], cells) for e in order}
        for index, bucketing in enumerate(bucketings)
    }
    logger.info("enumerated %d samples x %d bucketings x 2 parities", total, len(bucketings))
    return SelectionTable(order, probabilities, cells * len(bucketings))


def exact_selection_probabilities(m: Matroid, w: WeightedGroundSet, promise: AidedPromise, order: Sequence[int],
                                  bucketing: Optional[Bucketing] = None, taus: Optional[Iterable[int]] = None,
                                  workers: int = 1) -> Dict[int, Fraction]:
    """Pr[e ∈ T] for a fixed bucketing, or for random (τ, Δ) when `bucketing` is None"""
    if bucketing is not None:
        table = exact_selection_table(m, w, promise, order, [bucketing], workers=workers)
        return table.for_bucketing(bucketing)
    mixture = bucketing_mixture(promise.classing().h, taus)
    table = exact_selection_table(m, w, promise, order, mixture, workers=workers)
    return table.mixture(mixture)


@dataclass
class SelectionEstimate:
    trials: int
    element_frequency: Dict[int, float]
    class_mean: Dict[int, float]
    class_stderr: Dict[int, float]

    def element_stderr(self, e: int) -> float:
        p = self.element_frequency[e]
        return math.sqrt(p * (1 - p) / self.trials)


def estimate_selection(m: Matroid, w: WeightedGroundSet, promise: AidedPromise, trials: int,
                       streams: TrialStreams, tau: Optional[int] = None, arrange=None) -> SelectionEstimate:
    """Monte Carlo Pr[e ∈ T] and E|T ∩ C_i| for the full algorithm (τ optionally pinned)"""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    classes = promise.classing().classify(w)
    h = promise.classing().h
    hits: Counter = Counter()
    per_class = np.zeros((trials, h), dtype=float)
    for t in range(trials):
        child = streams.child(t)
        alg = LogLogAlgorithm(promise, child, tau=tau)
        selected = run_sbmsp(alg, m, w, child["sample"], arrange).selected
        hits.update(selected)
        for e in selected:
            per_class[t, classes[e] - 1] += 1
    frequency = {e: hits[e] / trials for e in sorted(m.ground_set)}
    means = per_class.mean(axis=0)
    spread = per_class.std(axis=0, ddof=1) / math.sqrt(trials) if trials > 1 else np.zeros(h)
    return SelectionEstimate(
        trials,
        frequency,
        {i + 1: float(means[i]) for i in range(h)},
        {i + 1: float(spread[i]) for i in range(h)},
    )
