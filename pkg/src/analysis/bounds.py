"""Closed-form guarantees and the per-element / per-bucket / per-class lower bounds.

The `p` argument is anything with `p(e, i)`; exact tables give Fractions, so
these bounds stay exact whenever their inputs are.
"""
import math
from fractions import Fraction
from typing import Callable, Iterable, Tuple

from src.buckets.bucketing import Bucketing, tau_max


def competitive_bound(h: int) -> int:
    """Aided guarantee 16(⌈log₂(h+1)⌉ + 1)"""
    if h < 1:
        raise ValueError(f"h must be positive, got {h}")
    return 16 * (tau_max(h) + 1)


def aided_bound_upper(rho_tilde: int) -> float:
    """16[log₂ log₂ max(ρ̃, 4) + 5], which dominates competitive_bound(h(ρ̃))"""
    return 16 * (math.log2(math.log2(max(rho_tilde, 4))) + 5)


def end_to_end_bound(rho: int) -> float:
    """2560[log₂ log₂(4ρ) + 5] for the unaided random-order algorithm"""
    if rho < 1:
        raise ValueError(f"rank must be at least 1, got {rho}")
    return 2560 * (math.log2(math.log2(4 * rho)) + 5)


def reduction_bound(alpha: Callable[[int], float], rho: int) -> float:
    """Guarantee of the unaided wrapper around an α(ρ̃)-competitive aided algorithm"""
    return 160 * alpha(4 * rho)


def element_gap_bound(p, bucketing: Bucketing, e: int, bucket: int):
    """(p_(e, f(B_(i-1))) - p_(e, f(B_i))) / 4"""
    return (p(e, bucketing.f(bucket - 1)) - p(e, bucketing.f(bucket))) / 4


def bucket_coverage_bounds(p, bucketing: Bucketing, bucket: int, opt_in_bucket: Iterable[int]) -> Tuple:
    """¼ Σ p_(e, f(B_(i-1))) and the weaker ¼ Σ p_(e, f(B_i)), over B_i ∩ OPT"""
    members = list(opt_in_bucket)
    below = sum((p(e, bucketing.f(bucket - 1)) for e in members), Fraction(0)) / 4
    own = sum((p(e, bucketing.f(bucket)) for e in members), Fraction(0)) / 4
    return below, own


def singleton_class_bound(p, class_index: int, opt_in_class: Iterable[int]):
    """¼ Σ_(e ∈ C_i ∩ OPT) p_(e,i), for singleton buckets"""
    return sum((p(e, class_index) for e in opt_in_class), Fraction(0)) / 4


def coarse_element_bound(p, e: int, class_index: int, h: int):
    """(1 - p_(e,i)) / (8⌈log₂(h+1)⌉), averaged over widths 2^τ with τ >= 1"""
    return (1 - p(e, class_index)) / (8 * tau_max(h))


def class_fraction_bound(opt_count: int, h: int) -> Fraction:
    """|C_i ∩ OPT| / (8(⌈log₂(h+1)⌉ + 1))"""
    return Fraction(opt_count, 8 * (tau_max(h) + 1))
