"""Full-knowledge construction of the bucket minors.

Used off-line (tests, analysis) to evaluate the selection rule directly
through the contraction rank formula, independently of the span-based test
the online algorithm runs.
"""
from typing import Dict, FrozenSet, Iterable

from src.buckets.bucketing import Bucketing
from src.matroid.base import Matroid
from src.matroid.minor import MinorView


def _at_or_above(elements: Iterable[int], classes: Dict[int, int], bucketing: Bucketing, i: int) -> FrozenSet[int]:
    classes_above = bucketing.classes_at_or_above(i)
    if not classes_above:
        return frozenset()
    return frozenset(e for e in elements if e in classes and classes[e] >= classes_above.start)


def bucket_ground_set(m: Matroid, sample: FrozenSet[int], classes: Dict[int, int],
                      bucketing: Bucketing, i: int) -> FrozenSet[int]:
    """N_i: B_1 for i = 1, else B_i ∩ span(S ∩ B_(>=i-1))"""
    members = [e for e, c in classes.items() if bucketing.bucket_of(c) == i]
    if i == 1:
        return frozenset(members)
    spanning = _at_or_above(sample, classes, bucketing, i - 1)
    return frozenset(e for e in members if m.span_contains(spanning, e))


def bucket_minor(m: Matroid, sample: FrozenSet[int], classes: Dict[int, int],
                 bucketing: Bucketing, i: int) -> MinorView:
    contracted = _at_or_above(sample, classes, bucketing, i + 1)
    return MinorView(m, contracted, bucket_ground_set(m, sample, classes, bucketing, i))


def direct_accept(m: Matroid, sample: FrozenSet[int], classes: Dict[int, int], bucketing: Bucketing,
                  e: int, i: int, selected_before: FrozenSet[int]) -> bool:
    """e ∈ N_i and rank_i(T_i + e) = |T_i| + 1"""
    minor = bucket_minor(m, sample, classes, bucketing, i)
    if e not in minor.restricted:
        return False
    return minor.rank(selected_before | {e}) == len(selected_before) + 1
