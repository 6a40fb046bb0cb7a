"""Bound suites: every guarantee of the bucket algorithm checked against exact or estimated oracles."""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from src.analysis.bounds import (bucket_coverage_bounds, class_fraction_bound, coarse_element_bound,
                                 element_gap_bound, singleton_class_bound)
from src.analysis.p_table import SpanProbabilityTable, estimate_p_table, exact_p_table
from src.analysis.report import BoundReport, BoundRow
from src.analysis.selection import bucketing_mixture, estimate_selection, exact_selection_table
from src.buckets.bucketing import Bucketing, bucket_members, tau_max
from src.config.settings import CONFIG
from src.matroid.axioms import AXIOM_BUDGET, check_axioms
from src.matroid.base import Matroid
from src.matroid.minor import MinorView
from src.matroid.weights import WeightedGroundSet, greedy_max_weight
from src.secretary.protocol import AidedPromise
from src.secretary.randomness import TrialStreams

logger = logging.getLogger(__name__)

ELEMENT_GAP = "element-vs-span-gap"
BUCKET_COVERAGE = "bucket-opt-coverage"
BUCKET_COVERAGE_OWN = "bucket-opt-coverage-own"
CLASS_SINGLETONS = "class-coverage-singleton-buckets"
ELEMENT_COARSE = "element-coarse-buckets"
CLASS_FRACTION = "class-opt-fraction"


def monte_carlo_tolerance(sigma: float, trials: int, sigmas: float) -> float:
    """One-sided slack: `sigmas` standard errors plus the resolution 1/trials of an observed frequency"""
    return sigmas * sigma + 1 / trials


def arrival_orders(m: Matroid, w: WeightedGroundSet, count: int, streams: TrialStreams) -> List[Tuple[str, Tuple[int, ...]]]:
    """Three deterministic orders, then seeded random permutations up to `count`"""
    ids = tuple(sorted(m.ground_set))
    fixed = [
        ("ascending-id", ids),
        ("increasing-weight", tuple(sorted(ids, key=w.key))),
        ("decreasing-weight", tuple(sorted(ids, key=w.key, reverse=True))),
    ]
    orders = fixed[:count]
    for k in range(count - len(orders)):
        perm = streams.child(k)["order"].permutation(len(ids))
        orders.append((f"random-{k}", tuple(ids[j] for j in perm)))
    return orders


def _bucketing_rows(report: BoundReport, p: SpanProbabilityTable, bucketing: Bucketing, probs, classes, opt,
                    label: str) -> None:
    context = f"{label};{bucketing.serialize()}"
    grouped = bucket_members(bucketing, classes)
    for i, members in grouped.items():
        for e in members:
            report.add(BoundRow(ELEMENT_GAP, probs[e], element_gap_bound(p, bucketing, e, i),
                                context=context, element_id=e, class_index=classes[e], bucket=i))
        observed = sum((probs[e] for e in members), Fraction(0))
        below, own = bucket_coverage_bounds(p, bucketing, i, [e for e in members if e in opt])
        report.add(BoundRow(BUCKET_COVERAGE, observed, below, context=context, bucket=i))
        report.add(BoundRow(BUCKET_COVERAGE_OWN, observed, own, context=context, bucket=i))


def exact_bound_suite(m: Matroid, w: WeightedGroundSet, promise: Optional[AidedPromise] = None, orders: int = 6,
                      seed: Optional[int] = None, workers: int = 1,
                      p_table: Optional[SpanProbabilityTable] = None) -> BoundReport:
    """Zero-tolerance checks from full enumeration of samples, parities and bucketings"""
    promise = promise or AidedPromise.tight(m, w)
    promise.validate(m, w)
    classing = promise.classing()
    h = classing.h
    p = p_table or exact_p_table(m, w, classing)
    classes = classing.classify(w)
    opt = greedy_max_weight(m, w)
    members = classing.members(w)
    full = bucketing_mixture(h)
    coarse = bucketing_mixture(h, range(1, tau_max(h) + 1))
    singletons = Bucketing.singletons(h)
    seed = CONFIG['DEFAULT_SEED'] if seed is None else seed
    report = BoundReport()
    for label, order in arrival_orders(m, w, orders, TrialStreams(seed)):
        table = exact_selection_table(m, w, promise, order, full, workers=workers)
        for bucketing in table.probabilities:
            _bucketing_rows(report, p, bucketing, table.for_bucketing(bucketing), classes, opt, label)
        fine = table.for_bucketing(singletons)
        by_tau = table.mixture(coarse)
        overall = table.mixture(full)
        for i in range(1, h + 1):
            in_class = members.get(i, [])
            opt_in_class = [e for e in in_class if e in opt]
            report.add(BoundRow(CLASS_SINGLETONS, sum((fine[e] for e in in_class), Fraction(0)),
                                singleton_class_bound(p, i, opt_in_class), context=label, class_index=i))
            # a clipped first bucket can fall below the two averaged bounds: reported, not enforced
            report.add(BoundRow(CLASS_FRACTION, sum((overall[e] for e in in_class), Fraction(0)),
                                class_fraction_bound(len(opt_in_class), h), context=label, class_index=i,
                                enforced=False))
            for e in in_class:
                report.add(BoundRow(ELEMENT_COARSE, by_tau[e], coarse_element_bound(p, e, i, h),
                                    context=label, element_id=e, class_index=i, enforced=False))
        logger.info("order %s: %d rows so far", label, len(report.rows))
    return report


def monte_carlo_bound_suite(m: Matroid, w: WeightedGroundSet, trials: int, streams: TrialStreams,
                            promise: Optional[AidedPromise] = None, sigmas: Optional[float] = None) -> BoundReport:
    """Per-class checks from estimates, each with a one-sided tolerance of `sigmas` standard errors"""
    promise = promise or AidedPromise.tight(m, w)
    promise.validate(m, w)
    sigmas = CONFIG['MC_SIGMAS'] if sigmas is None else sigmas
    classing = promise.classing()
    h = classing.h
    p = estimate_p_table(m, w, classing, trials, streams.child(0)["sample"], seed=streams.seed)
    opt = greedy_max_weight(m, w)
    members = classing.members(w)
    fine = estimate_selection(m, w, promise, trials, streams.child(1), tau=0)
    overall = estimate_selection(m, w, promise, trials, streams.child(2))
    report = BoundReport()
    for i in range(1, h + 1):
        opt_in_class = [e for e in members.get(i, []) if e in opt]
        bound_sigma = math.sqrt(sum(p.sigma(e, i) ** 2 for e in opt_in_class)) / 4
        tolerance = monte_carlo_tolerance(math.hypot(fine.class_stderr[i], bound_sigma), trials, sigmas)
        report.add(BoundRow(CLASS_SINGLETONS, fine.class_mean[i], float(singleton_class_bound(p, i, opt_in_class)),
                            mode="monte-carlo", tolerance=tolerance, class_index=i, trials=trials))
        tolerance = monte_carlo_tolerance(overall.class_stderr[i], trials, sigmas)
        report.add(BoundRow(CLASS_FRACTION, overall.class_mean[i], float(class_fraction_bound(len(opt_in_class), h)),
                            mode="monte-carlo", tolerance=tolerance, class_index=i, trials=trials, enforced=False))
    return report


def axiom_report(m: Matroid, budget: Optional[int] = None) -> BoundReport:
    """Matroid-axiom checks as report rows: observed 1 when the axiom held"""
    budget = AXIOM_BUDGET if budget is None else budget
    ground = sorted(m.ground_set)
    views = [("matroid", m, ground)]
    if len(ground) > 1:
        first, last = ground[0], ground[-1]
        views.append((f"contract-{first}", MinorView(m, {first}), ground[1:]))
        views.append((f"delete-{last}", MinorView(m, (), restricted=ground[:-1]), ground[:-1]))
    report = BoundReport()
    for label, oracle, elements in views:
        for result in check_axioms(oracle, elements, budget=budget):
            context = f"{label};{result.counterexample or f'{result.checked} cases'}"
            report.add(BoundRow(f"axiom-{result.axiom}", Fraction(int(result.passed)), Fraction(1), context=context))
    return report
