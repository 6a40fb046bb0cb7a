"""Trial execution: one shared instance, `trials` independent seeded runs, ordered results."""
import logging
import math
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

from src.analysis.bounds import competitive_bound, end_to_end_bound
from src.buckets.bucketing import RandomBucketingParams
from src.config.experiment import ExperimentConfig
from src.errors import ConfigError, InvalidBucketingError
from src.experiment.generators import build_problem
from src.experiment.orders import arrangement_for, shuffled_order
from src.experiment.records import TrialRecord, format_value
from src.matroid.base import Matroid
from src.matroid.io import parse_instance, parse_weights
from src.matroid.weights import WeightedGroundSet, greedy_max_weight
from src.secretary.baseline import classical_secretary_baseline
from src.secretary.full_algorithm import LogLogAlgorithm
from src.secretary.protocol import AidedPromise, SbmspAlgorithm, SelectionOutcome, run_sbmsp
from src.secretary.randomness import TrialStreams, trial_streams
from src.secretary.reductions import AidedToUnaided, loglog_factory, sbmsp_to_msp

logger = logging.getLogger(__name__)

HEAVY_FRACTION = 20

_CONTEXT: Dict[str, Any] = {}


@dataclass
class RunContext:
    config: ExperimentConfig
    m: Matroid
    w: WeightedGroundSet
    opt: FrozenSet[int]
    opt_weight: float
    rho: int
    promise: Optional[AidedPromise] = None
    params: Optional[RandomBucketingParams] = None

    @classmethod
    def prepare(cls, config: ExperimentConfig) -> "RunContext":
        m, w = build_problem(config)
        opt = greedy_max_weight(m, w)
        context = cls(config, m, w, opt, w.total(opt), m.full_rank())
        if config.algorithm in ("full", "bucketing-fixed"):
            context.promise = AidedPromise.tight(m, w)
            context.promise.validate(m, w)
        if config.algorithm == "bucketing-fixed":
            context.params = RandomBucketingParams(config.tau, config.delta)
            try:
                context.params.validate(context.promise.classing().h)
            except InvalidBucketingError as e:
                raise ConfigError(str(e)) from e
        return context

    def build_algorithm(self, streams: TrialStreams) -> SbmspAlgorithm:
        p_s = self.config.p_s
        if self.config.algorithm == "aided-wrapped":
            return AidedToUnaided(loglog_factory(streams, sample_probability=p_s), streams,
                                  inner_sampling_probability=p_s)
        return LogLogAlgorithm(self.promise, streams, params=self.params, sample_probability=p_s)


@dataclass
class RunResult:
    records: List[TrialRecord]
    summary: List[Tuple[str, Any]] = field(default_factory=list)

    @property
    def dependent_trials(self) -> int:
        return sum(not r.independent for r in self.records)

    def summary_lines(self) -> List[str]:
        return [f"{key}={format_value(value)}" for key, value in self.summary]


def _init_worker(context: RunContext) -> None:
    _CONTEXT["run"] = context


def _permutation(n: int, streams: TrialStreams) -> List[int]:
    return [int(e) for e in streams["order"].permutation(n)]


def _play(ctx: RunContext, trial_id: int) -> Tuple[SelectionOutcome, str]:
    config = ctx.config
    if config.order == "worst-of-k":
        worst = None
        for j in range(config.order_k):
            streams = trial_streams(config.seed, trial_id)
            outcome = run_sbmsp(ctx.build_algorithm(streams), ctx.m, ctx.w, streams["sample"],
                                shuffled_order(streams.child(j)["order"]))
            if worst is None or ctx.w.total(outcome.selected) < ctx.w.total(worst.selected):
                worst = outcome
        return worst, f"worst-of-{config.order_k}(pessimistic)"
    streams = trial_streams(config.seed, trial_id)
    alg = ctx.build_algorithm(streams)
    if config.order == "random":
        return sbmsp_to_msp(alg, ctx.m, ctx.w, _permutation(ctx.m.n, streams), streams), "random"
    return run_sbmsp(alg, ctx.m, ctx.w, streams["sample"], arrangement_for(config.order, ctx.w)), config.order


def _baseline(ctx: RunContext, trial_id: int) -> SelectionOutcome:
    streams = trial_streams(ctx.config.seed, trial_id)
    arrivals = _permutation(ctx.m.n, streams)
    chosen = classical_secretary_baseline(ctx.w, arrivals)
    cutoff = math.floor(ctx.m.n / math.e)
    selected = frozenset() if chosen is None else frozenset({chosen})
    return SelectionOutcome(selected, frozenset(arrivals[:cutoff]), tuple(arrivals[cutoff:]))


def _stat(stats: Dict[str, Any], key: str):
    value = stats.get(key)
    return None if value == "" else value


def execute_trial(ctx: RunContext, trial_id: int) -> TrialRecord:
    if ctx.config.algorithm == "classical-baseline":
        outcome, order = _baseline(ctx, trial_id), "random"
    else:
        outcome, order = _play(ctx, trial_id)
    stats = outcome.stats
    selected_weight = ctx.w.total(outcome.selected)
    independent = ctx.m.is_independent(outcome.selected)
    if not independent:
        logger.error("trial %d selected a dependent set %s", trial_id, sorted(outcome.selected))
    return TrialRecord(
        trial=trial_id,
        seed=ctx.config.seed,
        family=ctx.m.family,
        n=ctx.m.n,
        rho=ctx.rho,
        h=stats.get("h"),
        tau=_stat(stats, "tau"),
        delta=_stat(stats, "delta"),
        parity=stats.get("parity", ""),
        sample_size=len(outcome.sample),
        selected_size=len(outcome.selected),
        opt_weight=ctx.opt_weight,
        selected_weight=selected_weight,
        ratio=ctx.opt_weight / selected_weight if selected_weight > 0 else math.inf,
        promise_violations=stats.get("promise_violations", 0),
        bucketing=stats.get("bucketing", ""),
        order=order,
        best_selected=ctx.w.heaviest() in outcome.selected,
        independent=independent,
    )


def _worker_trial(trial_id: int) -> TrialRecord:
    return execute_trial(_CONTEXT["run"], trial_id)


def _bound(ctx: RunContext) -> Optional[float]:
    if ctx.promise is not None:
        return competitive_bound(ctx.promise.classing().h)
    if ctx.config.algorithm == "aided-wrapped":
        return end_to_end_bound(max(ctx.rho, 1))
    if ctx.rho == 1:
        return math.e
    return None


def summarise(ctx: RunContext, records: List[TrialRecord]) -> List[Tuple[str, Any]]:
    config = ctx.config
    summary: List[Tuple[str, Any]] = [
        ("trials", len(records)), ("family", ctx.m.family), ("n", ctx.m.n), ("rho", ctx.rho),
        ("algorithm", config.algorithm), ("order", config.order), ("seed", config.seed),
    ]
    if not records:
        summary.append(("status", "no trials"))
        return summary
    weights = np.array([r.selected_weight for r in records])
    ratios = np.array([r.ratio for r in records])
    finite = ratios[np.isfinite(ratios)]
    mean_weight = float(weights.mean())
    summary += [
        ("opt_weight", ctx.opt_weight),
        ("mean_selected_weight", mean_weight),
        ("mean_ratio", float(finite.mean()) if finite.size else math.inf),
        ("median_ratio", float(np.median(finite)) if finite.size else math.inf),
        ("zero_weight_trials", int(ratios.size - finite.size)),
        ("empirical_fraction", mean_weight / ctx.opt_weight),
        ("observed_ratio", ctx.opt_weight / mean_weight if mean_weight > 0 else math.inf),
        ("bound", _bound(ctx)),
        ("heavy_element", ctx.w.max_weight() >= ctx.opt_weight / HEAVY_FRACTION),
        ("best_hit_rate", sum(r.best_selected for r in records) / len(records)),
        ("promise_violations", sum(r.promise_violations for r in records)),
        ("dependent_trials", sum(not r.independent for r in records)),
    ]
    return summary


def run(config: ExperimentConfig) -> RunResult:
    """All trials of one experiment, in trial-id order whatever the worker count"""
    ctx = RunContext.prepare(config)
    logger.info("running %d trials of %s on %s with %d workers",
                config.trials, config.algorithm, ctx.m.describe(), config.workers)
    if config.trials == 0:
        records: List[TrialRecord] = []
    elif config.workers > 1:
        chunk = max(1, config.trials // (config.workers * 8))
        with Pool(config.workers, initializer=_init_worker, initargs=(ctx,)) as pool:
            records = list(pool.imap(_worker_trial, range(config.trials), chunksize=chunk))
    else:
        records = [execute_trial(ctx, t) for t in range(config.trials)]
    return RunResult(records, summarise(ctx, records))


def format_weight(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def offline_optimum(instance_path: str, weights_path: str) -> Tuple[List[int], float]:
    """The greedy max-weight basis of an instance file under a weights file"""
    m = parse_instance(instance_path)
    w = parse_weights(weights_path, m.n)
    opt = greedy_max_weight(m, w)
    return sorted(opt), w.total(opt)
