"""Sample-based online selection: the algorithm contract and the environment that drives it.

An algorithm declares its sampling probability before seeing anything. The
environment then reveals a random sample S (no selection allowed), and
afterwards offers the remaining elements one at a time, in an order the
algorithm has no say in. Selections are irrevocable.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence

import numpy as np

from src.buckets.classing import WeightClassing
from src.errors import PromiseViolationError, SecretaryError
from src.matroid.audit import AuditOracle
from src.matroid.base import IndependenceOracle, Matroid
from src.matroid.weights import WeightedGroundSet

logger = logging.getLogger(__name__)

Arrange = Callable[[FrozenSet[int], List[int]], Sequence[int]]


class Phase(Enum):
    AWAITING_SAMPLE = "awaiting-sample"
    STREAMING = "streaming"
    DONE = "done"


@dataclass(frozen=True)
class AidedPromise:
    """ρ̃ >= rank(M) and every weight in (W/(8ρ̃), W]"""

    rho_tilde: int
    W: float

    def classing(self) -> WeightClassing:
        return WeightClassing(self.W, self.rho_tilde)

    def violations(self, m: Matroid, w: WeightedGroundSet) -> List[str]:
        problems = []
        rho = m.full_rank()
        if self.rho_tilde < rho:
            problems.append(f"rho_tilde={self.rho_tilde} below rank {rho}")
        floor = self.W / (8 * self.rho_tilde)
        outside = [e for e in sorted(w) if not floor < w[e] <= self.W]
        if outside:
            problems.append(f"{len(outside)} weights outside ({floor}, {self.W}], e.g. element {outside[0]}")
        return problems

    def validate(self, m: Matroid, w: WeightedGroundSet) -> None:
        problems = self.violations(m, w)
        if problems:
            raise PromiseViolationError("; ".join(problems))

    @classmethod
    def tight(cls, m: Matroid, w: WeightedGroundSet) -> "AidedPromise":
        """ρ̃ = rank(M) and W = max weight: the strongest promise an instance admits"""
        return cls(max(m.full_rank(), 1), w.max_weight())


class SbmspAlgorithm(ABC):
    """Base for sample-based algorithms; subclasses fill in the two hooks"""

    def __init__(self):
        self.phase = Phase.AWAITING_SAMPLE
        self.oracle: Optional[IndependenceOracle] = None
        self.selected: List[int] = []
        self.promise_violations = 0

    @property
    @abstractmethod
    def sampling_probability(self) -> float:
        """p_s, fixed before any element is seen"""

    @abstractmethod
    def _on_sample(self, sample: Mapping[int, float]) -> None: ...

    @abstractmethod
    def _on_arrival(self, e: int, weight: float) -> bool: ...

    def start(self, oracle: IndependenceOracle, sample: Mapping[int, float]) -> None:
        if self.phase is not Phase.AWAITING_SAMPLE:
            raise SecretaryError(f"start() called in phase {self.phase.value}")
        self.oracle = oracle
        self._on_sample(dict(sample))
        self.phase = Phase.STREAMING

    def offer(self, e: int, weight: float) -> bool:
        if self.phase is not Phase.STREAMING:
            raise SecretaryError(f"offer() called in phase {self.phase.value}")
        accepted = self._on_arrival(e, weight)
        if accepted:
            self.selected.append(e)
        return accepted

    def finish(self) -> FrozenSet[int]:
        self.phase = Phase.DONE
        return frozenset(self.selected)

    def stats(self) -> Dict[str, Any]:
        return {"promise_violations": self.promise_violations}


@dataclass
class SelectionOutcome:
    selected: FrozenSet[int]
    sample: FrozenSet[int]
    arrivals: Sequence[int]
    stats: Dict[str, Any] = field(default_factory=dict)
    oracle_queries: int = 0
    audit_violations: int = 0


def draw_sample(elements: Iterable[int], p: float, rng: np.random.Generator) -> FrozenSet[int]:
    """Each element independently with probability p (scan in id order)"""
    ordered = sorted(elements)
    hits = rng.random(len(ordered)) < p
    return frozenset(e for e, hit in zip(ordered, hits) if hit)


def run_sample_based(alg: SbmspAlgorithm, m: IndependenceOracle, w: WeightedGroundSet,
                     sample: Iterable[int], arrivals: Sequence[int]) -> SelectionOutcome:
    """Reveal `sample`, then offer `arrivals` one by one through an audit oracle"""
    sample = frozenset(sample)
    oracle = AuditOracle(m, revealed=sample)
    alg.start(oracle, {e: w[e] for e in sample})
    for e in arrivals:
        oracle.reveal(e)
        alg.offer(e, w[e])
    selected = alg.finish()
    return SelectionOutcome(selected, sample, tuple(arrivals), alg.stats(),
                            oracle_queries=len(oracle.queries), audit_violations=oracle.violations)


def run_sbmsp(alg: SbmspAlgorithm, m: Matroid, w: WeightedGroundSet, rng: np.random.Generator,
              arrange: Optional[Arrange] = None) -> SelectionOutcome:
    """Draw S with the algorithm's declared probability, then stream the rest"""
    p = alg.sampling_probability
    sample = draw_sample(m.ground_set, p, rng)
    remaining = sorted(m.ground_set - sample)
    arrivals = list(arrange(sample, remaining)) if arrange is not None else remaining
    return run_sample_based(alg, m, w, sample, arrivals)
