"""Minors M/contracted|restricted answered through the parent oracle.

    r_minor(U) = r(U ∪ contracted) - r(contracted)

The contracted-set rank is taken once, at construction. No minor is ever
materialised.
"""
from typing import FrozenSet, Iterable, Optional

from src.errors import InvalidQueryError
from src.matroid.base import IndependenceOracle


class MinorView:
    """Contraction by `contracted`, then restriction to `restricted`.

    `restricted=None` leaves every non-contracted element in the view; the
    online algorithm uses this form because its restriction is a membership
    test on elements that have not arrived yet.
    """

    def __init__(self, parent: IndependenceOracle, contracted: Iterable[int],
                 restricted: Optional[Iterable[int]] = None):
        self.parent = parent
        self.contracted: FrozenSet[int] = frozenset(contracted)
        self.restricted: Optional[FrozenSet[int]] = None if restricted is None else frozenset(restricted)
        if self.restricted is not None and self.contracted & self.restricted:
            raise InvalidQueryError(
                f"contracted and restricted sets overlap on {sorted(self.contracted & self.restricted)}")
        self.contracted_rank = parent.rank(self.contracted)

    def _check(self, subset: Iterable[int]) -> FrozenSet[int]:
        elements = frozenset(subset)
        if self.restricted is not None:
            escaped = elements - self.restricted
        else:
            escaped = elements & self.contracted
        if escaped:
            raise InvalidQueryError(f"elements {sorted(escaped)} lie outside the minor's ground set")
        return elements

    def rank(self, subset: Iterable[int]) -> int:
        elements = self._check(subset)
        return self.parent.rank(elements | self.contracted) - self.contracted_rank

    def is_independent(self, subset: Iterable[int]) -> bool:
        elements = self._check(subset)
        return self.rank(elements) == len(elements)

    def span_contains(self, subset: Iterable[int], e: int) -> bool:
        elements = self._check(subset)
        self._check((e,))
        return self.rank(elements | {e}) == self.rank(elements)

    @property
    def ground_set(self) -> Optional[FrozenSet[int]]:
        return self.restricted


def minor_rank(v: MinorView, subset: Iterable[int]) -> int:
    return v.rank(subset)
