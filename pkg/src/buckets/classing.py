import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from src.errors import OutOfPromiseError
from src.matroid.weights import WeightedGroundSet


def ceil_log2(x: int) -> int:
    """⌈log₂ x⌉ for a positive integer, without floating point"""
    if x < 1:
        raise ValueError(f"ceil_log2 needs a positive integer, got {x}")
    return (x - 1).bit_length()


def class_count(rho_tilde: int) -> int:
    """h = ⌈3 + log₂ ρ̃⌉"""
    return 3 + ceil_log2(rho_tilde)


@dataclass(frozen=True)
class WeightClassing:
    """Geometric weight classes C_i = (W/2^(h-i+1), W/2^(h-i)] for i = 1..h"""

    W: float
    rho_tilde: int
    h: int = field(init=False)

    def __post_init__(self):
        if not self.W > 0:
            raise ValueError(f"W must be positive, got {self.W}")
        if self.rho_tilde < 1:
            raise ValueError(f"rho_tilde must be a positive integer, got {self.rho_tilde}")
        object.__setattr__(self, 'h', class_count(self.rho_tilde))

    def upper(self, i: int) -> float:
        return self.W / 2 ** (self.h - i)

    def lower(self, i: int) -> float:
        return self.W / 2 ** (self.h - i + 1)

    def promise_floor(self) -> float:
        """W/(8ρ̃): promised weights lie strictly above it"""
        return self.W / (8 * self.rho_tilde)

    def in_promise(self, weight: float) -> bool:
        return self.promise_floor() < weight <= self.W

    def class_of(self, weight: float) -> int:
        if not self.lower(1) < weight <= self.W:
            raise OutOfPromiseError(f"weight {weight} outside ({self.lower(1)}, {self.W}]")
        # log index is only a first guess; the half-open interval decides
        guess = self.h - math.floor(math.log2(self.W / weight))
        i = min(max(guess, 1), self.h)
        while i < self.h and weight > self.upper(i):
            i += 1
        while i > 1 and weight <= self.lower(i):
            i -= 1
        return i

    def try_class_of(self, weight: float) -> Optional[int]:
        try:
            return self.class_of(weight)
        except OutOfPromiseError:
            return None

    def classify(self, w: WeightedGroundSet, elements: Optional[Iterable[int]] = None) -> Dict[int, int]:
        """Class index per element; out-of-range elements are left out"""
        pool = w if elements is None else elements
        classes = {}
        for e in pool:
            i = self.try_class_of(w[e])
            if i is not None:
                classes[e] = i
        return classes

    def members(self, w: WeightedGroundSet) -> Dict[int, List[int]]:
        grouped: Dict[int, List[int]] = {i: [] for i in range(1, self.h + 1)}
        for e, i in self.classify(w).items():
            grouped[i].append(e)
        return grouped


def class_of(wc: WeightClassing, weight: float) -> int:
    return wc.class_of(weight)
