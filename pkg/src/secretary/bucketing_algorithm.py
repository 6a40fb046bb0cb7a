"""Greedy selection over the bucket minors.

After the sample S is revealed, each bucket i gets the minor

    M_i = (M / (S ∩ B_(>=i+1))) restricted to B_i ∩ span(S ∩ B_(>=i-1))

(bucket 1 is restricted to B_1 alone). One parity class of buckets is kept,
chosen by a fair coin, and every arriving element of a kept bucket is taken
greedily while it stays independent in its minor. Both membership and
independence are answered through spans of revealed elements only.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Mapping, NamedTuple, Optional

import numpy as np

from src.buckets.bucketing import Bucketing
from src.buckets.classing import WeightClassing
from src.matroid.base import IndependenceOracle
from src.matroid.minor import MinorView
from src.secretary.protocol import SbmspAlgorithm, run_sbmsp
from src.secretary.randomness import as_streams

logger = logging.getLogger(__name__)


class Parity(Enum):
    EVEN = 0
    ODD = 1

    def contains(self, bucket: int) -> bool:
        return bucket % 2 == self.value

    @property
    def label(self) -> str:
        return self.name.lower()


class Decision(NamedTuple):
    element: int
    bucket: int
    accepted: bool
    selected_before: FrozenSet[int]


@dataclass
class RunState:
    oracle: IndependenceOracle
    sample: FrozenSet[int]
    parity: Parity
    sample_classes: Dict[int, int]
    selected: Dict[int, List[int]] = field(default_factory=dict)
    minors: Dict[int, MinorView] = field(default_factory=dict)

    def sample_at_or_above(self, bucketing: Bucketing, i: int) -> FrozenSet[int]:
        """S ∩ B_(>=i)"""
        classes = bucketing.classes_at_or_above(i)
        if not classes:
            return frozenset()
        lowest = classes.start
        return frozenset(e for e, c in self.sample_classes.items() if c >= lowest)

    def selected_in(self, i: int) -> FrozenSet[int]:
        return frozenset(self.selected.get(i, ()))

    def minor(self, bucketing: Bucketing, i: int) -> MinorView:
        """M_i as a view over revealed elements; its restriction is checked separately"""
        if i not in self.minors:
            self.minors[i] = MinorView(self.oracle, self.sample_at_or_above(bucketing, i + 1))
        return self.minors[i]

    @property
    def union(self) -> FrozenSet[int]:
        return frozenset(e for chosen in self.selected.values() for e in chosen)


def accept_test(state: RunState, bucketing: Bucketing, e: int, i: int) -> bool:
    """e joins T_i iff it lies in the minor's ground set and keeps T_i independent there"""
    if i > 1 and not state.oracle.span_contains(state.sample_at_or_above(bucketing, i - 1), e):
        return False
    blockers = state.selected_in(i) | state.sample_at_or_above(bucketing, i + 1)
    return not state.oracle.span_contains(blockers, e)


class BucketingAlgorithm(SbmspAlgorithm):
    def __init__(self, classing: WeightClassing, bucketing: Bucketing,
                 parity_rng: Optional[np.random.Generator] = None, parity: Optional[Parity] = None,
                 record_decisions: bool = False, cross_check: bool = False, sample_probability: float = 0.5):
        super().__init__()
        if not 0 <= sample_probability <= 1:
            raise ValueError(f"sampling probability {sample_probability} outside [0, 1]")
        if bucketing.h != classing.h:
            raise ValueError(f"bucketing covers {bucketing.h} classes, classing has {classing.h}")
        if parity is None and parity_rng is None:
            raise ValueError("either a parity or a parity stream is required")
        self.classing = classing
        self.bucketing = bucketing
        self._parity_rng = parity_rng
        self._forced_parity = parity
        self.record_decisions = record_decisions
        self.cross_check = cross_check
        self.sample_probability = sample_probability
        self.decisions: List[Decision] = []
        self.cross_check_mismatches = 0
        self.state: Optional[RunState] = None

    @property
    def sampling_probability(self) -> float:
        return self.sample_probability

    def _on_sample(self, sample: Mapping[int, float]) -> None:
        parity = self._forced_parity
        if parity is None:
            parity = Parity.ODD if self._parity_rng.random() < 0.5 else Parity.EVEN
        classes = {}
        for e, weight in sample.items():
            c = self._promised_class(weight)
            if c is not None:
                classes[e] = c
        self.state = RunState(self.oracle, frozenset(sample), parity, classes)
        logger.debug("sample of %d elements, parity %s, buckets %s",
                     len(sample), parity.label, self.bucketing.serialize())

    def _promised_class(self, weight: float) -> Optional[int]:
        """Class of a weight in (W/(8ρ̃), W], None for anything outside the promise"""
        return self.classing.class_of(weight) if self.classing.in_promise(weight) else None

    def _on_arrival(self, e: int, weight: float) -> bool:
        c = self._promised_class(weight)
        if c is None:
            self.promise_violations += 1
            logger.debug("element %d with weight %g is outside the promised range", e, weight)
            return False
        i = self.bucketing.bucket_of(c)
        if not self.state.parity.contains(i):
            return False
        before = self.state.selected_in(i)
        accepted = accept_test(self.state, self.bucketing, e, i)
        if self.cross_check and accepted:
            if not self.state.minor(self.bucketing, i).is_independent(before | {e}):
                self.cross_check_mismatches += 1
                logger.error("span test accepted %d but it is dependent in minor %d", e, i)
        if self.record_decisions:
            self.decisions.append(Decision(e, i, accepted, before))
        if accepted:
            self.state.selected.setdefault(i, []).append(e)
        return accepted

    def stats(self) -> Dict[str, Any]:
        stats = super().stats()
        stats.update({
            "h": self.classing.h,
            "bucketing": self.bucketing.serialize(),
            "parity": self.state.parity.label if self.state else "",
            "cross_check_mismatches": self.cross_check_mismatches,
        })
        return stats


def bucketing_based_algorithm(m, w, classing: WeightClassing, bucketing: Bucketing, rng,
                              arrange=None) -> FrozenSet[int]:
    streams = as_streams(rng)
    alg = BucketingAlgorithm(classing, bucketing, parity_rng=streams["parity"])
    return run_sbmsp(alg, m, w, streams["sample"], arrange).selected
