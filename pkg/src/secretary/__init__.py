from src.secretary.baseline import classical_secretary_baseline
from src.secretary.bucketing_algorithm import (BucketingAlgorithm, Decision, Parity, RunState, accept_test,
                                               bucketing_based_algorithm)
from src.secretary.full_algorithm import LogLogAlgorithm, full_algorithm
from src.secretary.protocol import (AidedPromise, Phase, SbmspAlgorithm, SelectionOutcome, draw_sample,
                                    run_sample_based, run_sbmsp)
from src.secretary.randomness import TrialStreams, as_streams, trial_streams
from src.secretary.reductions import AidedToUnaided, Branch, aided_to_unaided, loglog_factory, sbmsp_to_msp

__all__ = [
    "classical_secretary_baseline", "BucketingAlgorithm", "Decision", "Parity", "RunState", "accept_test",
    "bucketing_based_algorithm", "LogLogAlgorithm", "full_algorithm", "AidedPromise", "Phase",
    "SbmspAlgorithm", "SelectionOutcome", "draw_sample", "run_sample_based", "run_sbmsp", "TrialStreams",
    "as_streams", "trial_streams", "AidedToUnaided", "Branch", "aided_to_unaided", "loglog_factory",
    "sbmsp_to_msp",
]
