"""Exhaustive matroid-axiom checks over bitmasks, for small ground sets."""
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence

from src.errors import EnumerationBudgetError

AXIOM_BUDGET = 12


class AxiomResult(NamedTuple):
    axiom: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None


def _subsets(elements: Sequence[int]) -> Dict[int, frozenset]:
    return {mask: frozenset(e for bit, e in enumerate(elements) if mask >> bit & 1)
            for mask in range(1 << len(elements))}


def check_axioms(oracle, elements: Sequence[int], budget: int = AXIOM_BUDGET) -> List[AxiomResult]:
    """Downward closure, exchange, rank monotonicity and submodularity on `elements`"""
    elements = sorted(elements)
    if len(elements) > budget:
        raise EnumerationBudgetError(f"axiom check over {len(elements)} elements exceeds budget {budget}")
    subsets = _subsets(elements)
    full = (1 << len(elements)) - 1
    independent = {mask for mask, s in subsets.items() if oracle.is_independent(s)}
    rank = {mask: oracle.rank(s) for mask, s in subsets.items()}
    results = []

    def report(name: str, checked: int, bad: Optional[str]):
        results.append(AxiomResult(name, bad is None, checked, bad))

    report("nonempty", 1, None if 0 in independent else "empty set is dependent")

    bad = None
    checked = 0
    for mask in independent:
        for bit in range(len(elements)):
            if mask >> bit & 1:
                checked += 1
                if mask & ~(1 << bit) not in independent:
                    bad = bad or f"{sorted(subsets[mask])} independent, drop {elements[bit]} dependent"
    report("downward-closure", checked, bad)

    by_size: Dict[int, List[int]] = {}
    for mask in independent:
        by_size.setdefault(bin(mask).count("1"), []).append(mask)
    bad = None
    checked = 0
    for size, smaller in by_size.items():
        for a in smaller:
            for b in by_size.get(size + 1, ()):
                checked += 1
                diff = b & ~a
                if not any(diff >> bit & 1 and (a | 1 << bit) in independent for bit in range(len(elements))):
                    bad = bad or f"cannot augment {sorted(subsets[a])} from {sorted(subsets[b])}"
    report("exchange", checked, bad)

    largest = [0] * (full + 1)
    for mask in range(full + 1):
        if mask in independent:
            largest[mask] = bin(mask).count("1")
        else:
            largest[mask] = max((largest[mask & ~(1 << bit)] for bit in range(len(elements)) if mask >> bit & 1),
                                default=0)
    bad = None
    checked = 0
    for mask in range(full + 1):
        if rank[mask] != largest[mask]:
            bad = bad or f"rank of {sorted(subsets[mask])} is not the largest independent subset"
        for x, y in combinations(range(len(elements)), 2):
            if mask >> x & 1 or mask >> y & 1:
                continue
            checked += 1
            with_x, with_y = mask | 1 << x, mask | 1 << y
            if rank[with_x] < rank[mask] or rank[with_x] + rank[with_y] < rank[with_x | with_y] + rank[mask]:
                bad = bad or f"submodularity fails at {sorted(subsets[mask])} with {elements[x]}, {elements[y]}"
    report("rank-submodular", checked, bad)
    return results
