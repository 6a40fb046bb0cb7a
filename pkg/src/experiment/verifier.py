"""Bound verification for one configured instance."""
import logging
from typing import Tuple

from src.analysis.report import BoundReport
from src.analysis.suite import axiom_report, exact_bound_suite, monte_carlo_bound_suite
from src.config.experiment import ExperimentConfig
from src.config.settings import CONFIG
from src.errors import EnumerationBudgetError
from src.experiment.generators import build_problem
from src.matroid.base import Matroid
from src.matroid.weights import WeightedGroundSet
from src.secretary.randomness import trial_streams

logger = logging.getLogger(__name__)

VERIFY_SALT = 2


def verify(config: ExperimentConfig) -> Tuple[BoundReport, Matroid, WeightedGroundSet]:
    m, w = build_problem(config)
    if config.axioms:
        report = axiom_report(m)
    elif config.monte_carlo:
        streams = trial_streams(config.seed, 0, salt=VERIFY_SALT)
        report = monte_carlo_bound_suite(m, w, config.mc_trials, streams)
    else:
        budget = CONFIG['EXACT_BUDGET_N']
        if m.n > budget:
            raise EnumerationBudgetError(
                f"n={m.n} is above the exact enumeration budget of {budget}; pass --monte-carlo")
        report = exact_bound_suite(m, w, orders=config.orders, seed=config.seed, workers=config.workers)
    logger.info("%d bound rows, %d failed, %d below a non-enforced bound",
                len(report.rows), len(report.failures), len(report.known_gaps))
    return report, m, w
