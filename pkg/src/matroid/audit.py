import logging
from typing import FrozenSet, Iterable, List, NamedTuple, Optional

from src.errors import AuditViolation
from src.matroid.base import IndependenceOracle

logger = logging.getLogger(__name__)


class OracleQuery(NamedTuple):
    kind: str
    subset: FrozenSet[int]
    element: Optional[int]


class AuditOracle:
    """Pass-through oracle that only answers on elements which have arrived.

    Single owner: the query log is mutated on every call.
    """

    def __init__(self, parent: IndependenceOracle, revealed: Iterable[int] = ()):
        self.parent = parent
        self._revealed = set(revealed)
        self.queries: List[OracleQuery] = []
        self.violations = 0

    @property
    def revealed(self) -> FrozenSet[int]:
        return frozenset(self._revealed)

    def reveal(self, e: int) -> None:
        self._revealed.add(e)

    def _admit(self, kind: str, subset: Iterable[int], e: Optional[int] = None) -> FrozenSet[int]:
        elements = frozenset(subset)
        self.queries.append(OracleQuery(kind, elements, e))
        touched = elements if e is None else elements | {e}
        unrevealed = touched - self._revealed
        if unrevealed:
            self.violations += 1
            logger.error("oracle %s query touches unrevealed elements %s", kind, sorted(unrevealed))
            raise AuditViolation(unrevealed)
        return elements

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self.parent.is_independent(self._admit("is_independent", subset))

    def rank(self, subset: Iterable[int]) -> int:
        return self.parent.rank(self._admit("rank", subset))

    def span_contains(self, subset: Iterable[int], e: int) -> bool:
        return self.parent.span_contains(self._admit("span", subset, e), e)


def audit_oracle(m: IndependenceOracle, revealed: Iterable[int] = ()) -> AuditOracle:
    return AuditOracle(m, revealed)
