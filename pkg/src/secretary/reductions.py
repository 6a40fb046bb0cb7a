"""Wrappers that remove assumptions from sample-based algorithms.

`sbmsp_to_msp` runs a sample-based algorithm on a random-order stream: the
first X ~ Binomial(n, p_s) arrivals form the sample, which puts every element
in it independently with probability p_s.

`AidedToUnaided` estimates the promise (W, ρ̃) from a half-sample and either
picks the first arrival at least as heavy as everything sampled, or runs the
aided algorithm on the arrivals heavy enough for the estimated range.
"""
import logging
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, Mapping, Optional, Sequence

from src.matroid.base import Matroid
from src.matroid.weights import WeightedGroundSet
from src.secretary.full_algorithm import LogLogAlgorithm
from src.secretary.protocol import (AidedPromise, SbmspAlgorithm, SelectionOutcome, run_sample_based,
                                    run_sbmsp)
from src.secretary.randomness import TrialStreams, as_streams

logger = logging.getLogger(__name__)

AidedFactory = Callable[[AidedPromise], SbmspAlgorithm]


def sbmsp_to_msp(alg: SbmspAlgorithm, m: Matroid, w: WeightedGroundSet, permutation: Sequence[int],
                 rng) -> SelectionOutcome:
    """Run `alg` on a uniformly random arrival order of all n elements"""
    n = len(permutation)
    p = alg.sampling_probability
    x = int(as_streams(rng)["prefix"].binomial(n, p)) if 0 < p < 1 else (n if p >= 1 else 0)
    outcome = run_sample_based(alg, m, w, permutation[:x], permutation[x:])
    outcome.stats["prefix_length"] = x
    return outcome


class Branch(Enum):
    SINGLE_PICK = "single-pick"
    AIDED = "aided"


class AidedToUnaided(SbmspAlgorithm):
    """Turns an aided algorithm into one that needs no promise.

    The branch coin is thrown first so the sampling probability can be
    declared up front: 1/2 on the single-pick branch, (1 + p_s)/2 on the
    aided branch, whose sample is then split into the estimation half and
    the inner algorithm's own sample.
    """

    def __init__(self, aided: AidedFactory, streams: TrialStreams, inner_sampling_probability: float = 0.5,
                 branch: Optional[Branch] = None):
        super().__init__()
        self.aided = aided
        self.streams = streams
        self.inner_p = inner_sampling_probability
        if branch is None:
            branch = Branch.SINGLE_PICK if streams["branch"].random() < 0.5 else Branch.AIDED
        self.branch = branch
        self.W = 0.0
        self.rho_tilde = 0
        self.estimation_sample: FrozenSet[int] = frozenset()
        self.inner: Optional[SbmspAlgorithm] = None
        self.ignored = 0
        self.fallback = False

    @property
    def sampling_probability(self) -> float:
        if self.branch is Branch.SINGLE_PICK:
            return 0.5
        return (1 + self.inner_p) / 2

    @property
    def threshold(self) -> float:
        """Arrivals at or below W/(8ρ̃) are ignored on the aided branch"""
        return self.W / (8 * self.rho_tilde) if self.rho_tilde else 0.0

    def _split(self, sample: Mapping[int, float]):
        if self.branch is Branch.SINGLE_PICK:
            return dict(sample), {}
        ordered = sorted(sample)
        coins = self.streams["split"].random(len(ordered))
        keep = 1 / (1 + self.inner_p)
        estimation = {e: sample[e] for e, coin in zip(ordered, coins) if coin < keep}
        inner = {e: sample[e] for e, coin in zip(ordered, coins) if coin >= keep}
        return estimation, inner

    def _on_sample(self, sample: Mapping[int, float]) -> None:
        estimation, inner_sample = self._split(sample)
        self.estimation_sample = frozenset(estimation)
        if estimation:
            self.W = max(estimation.values())
            self.rho_tilde = 4 * self.oracle.rank(estimation)
        if self.rho_tilde == 0:
            # nothing to estimate from: single pick over every arrival
            self.fallback = True
            self.W = 0.0
            logger.info("empty estimation sample; falling back to single pick")
            return
        if self.branch is Branch.AIDED:
            promise = AidedPromise(self.rho_tilde, self.W)
            self.inner = self.aided(promise)
            if abs(self.inner.sampling_probability - self.inner_p) > 1e-12:
                raise ValueError(f"aided algorithm samples with p={self.inner.sampling_probability}, "
                                 f"wrapper was built for p={self.inner_p}")
            kept = {e: wt for e, wt in inner_sample.items() if wt > self.threshold}
            self.inner.start(self.oracle, kept)

    def _on_arrival(self, e: int, weight: float) -> bool:
        if self.inner is None:
            return not self.selected and weight >= self.W
        if weight <= self.threshold:
            self.ignored += 1
            return False
        return self.inner.offer(e, weight)

    def finish(self) -> FrozenSet[int]:
        if self.inner is not None:
            self.inner.finish()
            self.promise_violations = self.inner.promise_violations
        return super().finish()

    def stats(self) -> Dict[str, Any]:
        stats = self.inner.stats() if self.inner is not None else super().stats()
        stats.update({
            "branch": self.branch.value,
            "fallback": self.fallback,
            "W": self.W,
            "rho_tilde": self.rho_tilde,
            "threshold": self.threshold,
            "ignored": self.ignored,
            "estimation_size": len(self.estimation_sample),
        })
        return stats


def aided_to_unaided(aided: AidedFactory, m: Matroid, w: WeightedGroundSet, rng, arrange=None) -> SelectionOutcome:
    streams = as_streams(rng)
    alg = AidedToUnaided(aided, streams)
    return run_sbmsp(alg, m, w, streams["sample"], arrange)


def loglog_factory(streams: TrialStreams, **options) -> AidedFactory:
    def build(promise: AidedPromise) -> SbmspAlgorithm:
        return LogLogAlgorithm(promise, streams, **options)

    return build
