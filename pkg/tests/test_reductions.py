import math

import numpy as np
import pytest
from scipy import stats

from conftest import make_weights
from src.buckets.bucketing import Bucketing
from src.matroid.families import UniformMatroid
from src.secretary.baseline import classical_secretary_baseline
from src.secretary.bucketing_algorithm import BucketingAlgorithm
from src.secretary.full_algorithm import LogLogAlgorithm
from src.secretary.protocol import AidedPromise, SbmspAlgorithm, run_sample_based, run_sbmsp
from src.secretary.randomness import TrialStreams, trial_streams
from src.secretary.reductions import AidedToUnaided, Branch, aided_to_unaided, loglog_factory, sbmsp_to_msp


class SampleRecorder(SbmspAlgorithm):
    """Selects nothing; remembers what it was shown"""

    def __init__(self, p):
        super().__init__()
        self.p = p
        self.seen = None

    @property
    def sampling_probability(self):
        return self.p

    def _on_sample(self, sample):
        self.seen = frozenset(sample)

    def _on_arrival(self, e, weight):
        return False


class TestBinomialPrefix:
    def test_zero_probability_has_no_sample_phase(self):
        m = UniformMatroid(5, 2)
        w = make_weights([5, 4, 3, 2, 1.5])
        outcome = sbmsp_to_msp(SampleRecorder(0.0), m, w, [4, 2, 0, 1, 3], TrialStreams(1))
        assert outcome.sample == frozenset()
        assert outcome.stats["prefix_length"] == 0

    def test_full_probability_leaves_nothing_to_select(self):
        m = UniformMatroid(5, 2)
        w = make_weights([5, 4, 3, 2, 1.5])
        classing = AidedPromise.tight(m, w).classing()
        alg = BucketingAlgorithm(classing, Bucketing.singletons(classing.h), parity_rng=TrialStreams(1)["parity"],
                                 sample_probability=1.0)
        outcome = sbmsp_to_msp(alg, m, w, [4, 2, 0, 1, 3], TrialStreams(1))
        assert outcome.sample == m.ground_set
        assert outcome.selected == frozenset()

    @pytest.mark.slow
    def test_membership_is_independent_with_the_declared_probability(self):
        n, p, runs = 4, 0.3, 100000
        m = UniformMatroid(n, 1)
        w = make_weights([4, 3, 2, 1])
        membership = np.zeros((runs, n), dtype=bool)
        for run in range(runs):
            streams = trial_streams(8, run)
            permutation = [int(e) for e in streams["order"].permutation(n)]
            outcome = sbmsp_to_msp(SampleRecorder(p), m, w, permutation, streams)
            membership[run, sorted(outcome.sample)] = True
        sigma = math.sqrt(p * (1 - p) / runs)
        for e in range(n):
            assert abs(membership[:, e].mean() - p) <= 3 * sigma
        table = np.array([[np.sum(membership[:, 0] & membership[:, 1]), np.sum(membership[:, 0] & ~membership[:, 1])],
                          [np.sum(~membership[:, 0] & membership[:, 1]), np.sum(~membership[:, 0] & ~membership[:, 1])]])
        _, p_value, _, _ = stats.chi2_contingency(table)
        assert p_value > 1e-3


class TestAidedToUnaided:
    def test_rank_of_the_sample_sets_rho_tilde(self):
        m = UniformMatroid(6, 3)
        w = make_weights([6, 5, 4, 3, 2, 1.5])
        streams = TrialStreams(2)
        alg = AidedToUnaided(loglog_factory(streams), streams, branch=Branch.SINGLE_PICK)
        run_sample_based(alg, m, w, {1, 2, 3, 4}, [0, 5])
        assert alg.rho_tilde == 12
        assert alg.W == 5

    def test_single_pick_takes_first_arrival_beating_the_sample(self):
        m = UniformMatroid(4, 2)
        w = make_weights([1.5, 9, 7, 4])
        streams = TrialStreams(2)
        alg = AidedToUnaided(loglog_factory(streams), streams, branch=Branch.SINGLE_PICK)
        outcome = run_sample_based(alg, m, w, {3}, [0, 2, 1])
        assert outcome.selected == {2}

    @pytest.mark.parametrize("branch", [Branch.SINGLE_PICK, Branch.AIDED])
    def test_empty_sample_falls_back_to_single_pick(self, branch):
        m = UniformMatroid(1, 1)
        w = make_weights([3.0])
        streams = TrialStreams(2)
        alg = AidedToUnaided(loglog_factory(streams), streams, branch=branch)
        outcome = run_sample_based(alg, m, w, set(), [0])
        assert outcome.selected == {0}
        assert outcome.stats["fallback"] is True

    def test_declared_probability_follows_the_branch(self):
        streams = TrialStreams(2)
        single = AidedToUnaided(loglog_factory(streams), streams, branch=Branch.SINGLE_PICK)
        aided = AidedToUnaided(loglog_factory(streams), streams, branch=Branch.AIDED)
        assert single.sampling_probability == 0.5
        assert aided.sampling_probability == 0.75

    def test_light_arrivals_are_ignored_on_the_aided_branch(self):
        m = UniformMatroid(8, 1)
        w = make_weights([8.0, 0.1, 5.0, 4.0, 3.0, 2.0, 1.0, 0.5])
        for seed in range(40):
            streams = TrialStreams(seed)
            alg = AidedToUnaided(loglog_factory(streams), streams, branch=Branch.AIDED)
            outcome = run_sample_based(alg, m, w, {0, 2, 3}, [1, 4, 5, 6, 7])
            if alg.fallback:
                continue
            assert alg.threshold == alg.W / (8 * alg.rho_tilde)
            assert 1 not in outcome.selected
            assert alg.ignored >= 1

    def test_inner_probability_mismatch_is_rejected(self):
        m = UniformMatroid(8, 1)
        w = make_weights([8, 7, 6, 5, 4, 3, 2, 1.5])
        streams = TrialStreams(0)
        alg = AidedToUnaided(loglog_factory(streams), streams, inner_sampling_probability=0.25,
                             branch=Branch.AIDED)
        with pytest.raises(ValueError):
            run_sample_based(alg, m, w, m.ground_set, [])

    @pytest.mark.slow
    def test_branch_coin_is_fair(self):
        runs = 100000
        single = sum(AidedToUnaided(loglog_factory(s), s).branch is Branch.SINGLE_PICK
                     for s in (trial_streams(6, t) for t in range(runs)))
        assert abs(single / runs - 0.5) <= 3 * math.sqrt(0.25 / runs)

    def test_heaviest_found_when_runner_up_is_sampled(self):
        m = UniformMatroid(2, 1)
        w = make_weights([10.0, 5.0])
        runs, hits = 16000, 0
        for t in range(runs):
            streams = trial_streams(12, t)
            alg = AidedToUnaided(loglog_factory(streams), streams)
            outcome = run_sbmsp(alg, m, w, streams["sample"])
            if alg.branch is Branch.SINGLE_PICK and outcome.sample == {1} and outcome.selected == {0}:
                hits += 1
        assert abs(hits / runs - 1 / 8) <= 4 * math.sqrt((1 / 8) * (7 / 8) / runs)

    def test_output_is_independent(self, instance):
        _, m, w = instance
        for t in range(200):
            streams = trial_streams(21, t)
            outcome = aided_to_unaided(loglog_factory(streams), m, w, streams)
            assert m.is_independent(outcome.selected)

    def test_sampling_probability_passes_through(self):
        streams = TrialStreams(2)
        alg = AidedToUnaided(loglog_factory(streams, sample_probability=0.4), streams,
                             inner_sampling_probability=0.4, branch=Branch.AIDED)
        assert alg.sampling_probability == pytest.approx(0.7)
        assert isinstance(alg.aided(AidedPromise(4, 1.0)), LogLogAlgorithm)


class TestClassicalBaseline:
    def test_single_element_is_selected(self):
        assert classical_secretary_baseline(make_weights([2.0]), [0]) == 0

    def test_never_selects_below_the_observed_best(self):
        w = make_weights([5, 9, 1, 2, 3, 4, 6, 7])
        assert classical_secretary_baseline(w, [1, 0, 2, 3, 4, 5, 6, 7]) is None

    @pytest.mark.slow
    def test_best_hit_rate_near_one_over_e(self):
        n, runs = 100, 20000
        rng = np.random.default_rng(77)
        w = make_weights(list(rng.permutation(n) + 1.0))
        best = w.heaviest()
        hits = sum(classical_secretary_baseline(w, range(n), rng=rng) == best for _ in range(runs))
        assert 0.33 <= hits / runs <= 0.41

    def test_decreasing_weights_keep_the_guarantee_under_shuffling(self):
        n, runs = 30, 6000
        rng = np.random.default_rng(3)
        w = make_weights([float(n - e) for e in range(n)])
        hits = sum(classical_secretary_baseline(w, range(n), rng=rng) == 0 for _ in range(runs))
        assert hits / runs > 0.33
