"""Bucketings: consecutive runs of weight classes, and the random (τ, Δ) family.

Buckets and classes are 1-indexed. Outside 1..b the conventions are
f(B_i) = ℓ(B_i) = 0 for i <= 0 and B_(b+1) = ∅.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from src.buckets.classing import ceil_log2
from src.errors import InvalidBucketingError


def tau_max(h: int) -> int:
    """⌈log₂(h+1)⌉"""
    return ceil_log2(h + 1)


@dataclass(frozen=True)
class RandomBucketingParams:
    tau: int
    delta: int

    def validate(self, h: int) -> None:
        if not 0 <= self.tau <= tau_max(h):
            raise InvalidBucketingError(f"tau={self.tau} outside [0, {tau_max(h)}] for h={h}")
        if not 0 <= self.delta <= 2 ** self.tau - 1:
            raise InvalidBucketingError(f"delta={self.delta} outside [0, {2 ** self.tau - 1}]")


@dataclass(frozen=True)
class Bucketing:
    h: int
    endpoints: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, 'endpoints', tuple((int(f), int(l)) for f, l in self.endpoints))
        self.validate()
        lookup = {}
        for index, (f, l) in enumerate(self.endpoints, start=1):
            for c in range(f, l + 1):
                lookup[c] = index
        object.__setattr__(self, '_bucket_of', lookup)

    def validate(self) -> None:
        if self.h < 1 or not self.endpoints:
            raise InvalidBucketingError("a bucketing needs h >= 1 and at least one bucket")
        if self.endpoints[0][0] != 1:
            raise InvalidBucketingError(f"first bucket starts at class {self.endpoints[0][0]}, not 1")
        if self.endpoints[-1][1] != self.h:
            raise InvalidBucketingError(f"last bucket ends at class {self.endpoints[-1][1]}, not h={self.h}")
        for index, (f, l) in enumerate(self.endpoints, start=1):
            if f > l:
                raise InvalidBucketingError(f"bucket {index} is empty: f={f} > l={l}")
            if index > 1 and self.endpoints[index - 2][1] + 1 != f:
                raise InvalidBucketingError(f"bucket {index} does not start right after bucket {index - 1}")

    @property
    def b(self) -> int:
        return len(self.endpoints)

    def f(self, i: int) -> int:
        if i <= 0:
            return 0
        if i > self.b:
            raise InvalidBucketingError(f"bucket {i} does not exist (b={self.b})")
        return self.endpoints[i - 1][0]

    def last(self, i: int) -> int:
        if i <= 0:
            return 0
        if i > self.b:
            raise InvalidBucketingError(f"bucket {i} does not exist (b={self.b})")
        return self.endpoints[i - 1][1]

    def bucket_of(self, class_index: int) -> int:
        return self._bucket_of[class_index]

    def classes_in(self, i: int) -> range:
        if i <= 0 or i > self.b:
            return range(0)
        f, l = self.endpoints[i - 1]
        return range(f, l + 1)

    def classes_at_or_above(self, i: int) -> range:
        """Class indices making up B_(>=i); B_(b+1) and beyond are empty"""
        if i > self.b:
            return range(0)
        return range(max(self.f(i), 1), self.h + 1)

    def serialize(self) -> str:
        return ",".join(f"{f}:{l}" for f, l in self.endpoints)

    @classmethod
    def parse(cls, h: int, text: str) -> "Bucketing":
        try:
            pairs = [tuple(int(x) for x in part.split(":")) for part in text.split(",")]
        except ValueError:
            raise InvalidBucketingError(f"malformed bucketing {text!r}") from None
        return cls(h, tuple(pairs))

    @classmethod
    def singletons(cls, h: int) -> "Bucketing":
        return cls(h, tuple((c, c) for c in range(1, h + 1)))


def make_bucketing(h: int, params: RandomBucketingParams) -> Bucketing:
    params.validate(h)
    width = 2 ** params.tau
    b = -(-(h + params.delta) // width)
    endpoints: List[Tuple[int, int]] = []
    for i in range(1, b + 1):
        first = max(width * (i - 1) - params.delta + 1, 1)
        last = min(width * i - params.delta, h)
        endpoints.append((first, last))
    return Bucketing(h, tuple(endpoints))


def sample_params(h: int, rng: np.random.Generator) -> RandomBucketingParams:
    tau = int(rng.integers(0, tau_max(h) + 1))
    delta = int(rng.integers(0, 2 ** tau))
    return RandomBucketingParams(tau, delta)


def all_params(h: int) -> List[RandomBucketingParams]:
    return [RandomBucketingParams(tau, delta)
            for tau in range(tau_max(h) + 1) for delta in range(2 ** tau)]


def bucket_members(bucketing: Bucketing, classes: Dict[int, int]) -> Dict[int, List[int]]:
    """Elements per bucket index, from an element -> class map"""
    grouped: Dict[int, List[int]] = {i: [] for i in range(1, bucketing.b + 1)}
    for e, c in classes.items():
        grouped[bucketing.bucket_of(c)].append(e)
    return grouped
