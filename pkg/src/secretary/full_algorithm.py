import logging
from typing import Any, Dict, FrozenSet, Mapping, Optional

from src.buckets.bucketing import Bucketing, RandomBucketingParams, make_bucketing, tau_max
from src.matroid.base import Matroid
from src.matroid.weights import WeightedGroundSet
from src.secretary.bucketing_algorithm import BucketingAlgorithm, Parity
from src.secretary.protocol import AidedPromise, SbmspAlgorithm, run_sbmsp
from src.secretary.randomness import TrialStreams, as_streams

logger = logging.getLogger(__name__)


class LogLogAlgorithm(SbmspAlgorithm):
    """Aided algorithm: a random power-of-two bucket width and shift, then bucket greedy.

    τ is uniform on 0..⌈log₂(h+1)⌉ and Δ uniform on 0..2^τ-1. `params` (or
    `tau` alone) pins the draw for tests and fixed-bucketing experiments. The guarantees
    assume the default sampling probability of 1/2; other values are an
    experimental knob.
    """

    def __init__(self, promise: AidedPromise, streams: TrialStreams,
                 params: Optional[RandomBucketingParams] = None, tau: Optional[int] = None,
                 parity: Optional[Parity] = None, record_decisions: bool = False, cross_check: bool = False,
                 sample_probability: float = 0.5):
        super().__init__()
        self.promise = promise
        self.classing = promise.classing()
        self.streams = streams
        self.params = params
        self._forced_tau = tau
        self._forced_parity = parity
        self._record_decisions = record_decisions
        self._cross_check = cross_check
        self.sample_probability = sample_probability
        self.inner: Optional[BucketingAlgorithm] = None
        if params is not None:
            params.validate(self.classing.h)

    @property
    def sampling_probability(self) -> float:
        return self.sample_probability

    def _draw_params(self) -> RandomBucketingParams:
        h = self.classing.h
        tau = self._forced_tau
        if tau is None:
            tau = int(self.streams["tau"].integers(0, tau_max(h) + 1))
        delta = int(self.streams["delta"].integers(0, 2 ** tau))
        return RandomBucketingParams(tau, delta)

    def _on_sample(self, sample: Mapping[int, float]) -> None:
        if self.params is None:
            self.params = self._draw_params()
        bucketing = make_bucketing(self.classing.h, self.params)
        logger.debug("tau=%d delta=%d -> %s", self.params.tau, self.params.delta, bucketing.serialize())
        self.inner = BucketingAlgorithm(self.classing, bucketing, parity_rng=self.streams["parity"],
                                        parity=self._forced_parity, record_decisions=self._record_decisions,
                                        cross_check=self._cross_check,
                                        sample_probability=self.sample_probability)
        self.inner.start(self.oracle, sample)

    def _on_arrival(self, e: int, weight: float) -> bool:
        return self.inner.offer(e, weight)

    @property
    def bucketing(self) -> Optional[Bucketing]:
        return self.inner.bucketing if self.inner else None

    @property
    def decisions(self):
        return self.inner.decisions if self.inner else []

    def finish(self) -> FrozenSet[int]:
        if self.inner is not None:
            self.inner.finish()
            self.promise_violations = self.inner.promise_violations
        return super().finish()

    def stats(self) -> Dict[str, Any]:
        stats = self.inner.stats() if self.inner else super().stats()
        stats.update({
            "tau": self.params.tau if self.params else "",
            "delta": self.params.delta if self.params else "",
            "rho_tilde": self.promise.rho_tilde,
        })
        return stats


def full_algorithm(m: Matroid, w: WeightedGroundSet, promise: AidedPromise, rng, arrange=None) -> FrozenSet[int]:
    streams = as_streams(rng)
    alg = LogLogAlgorithm(promise, streams)
    return run_sbmsp(alg, m, w, streams["sample"], arrange).selected
