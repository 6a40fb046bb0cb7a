import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from src.buckets.bucketing import (Bucketing, RandomBucketingParams, all_params, bucket_members,
                                   make_bucketing, sample_params, tau_max)
from src.buckets import class_of
from src.buckets.classing import WeightClassing, ceil_log2, class_count
from src.errors import InvalidBucketingError, OutOfPromiseError
from src.secretary.randomness import TrialStreams


class TestClassing:
    @pytest.mark.parametrize("x, expected", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4)])
    def test_ceil_log2(self, x, expected):
        assert ceil_log2(x) == expected

    @pytest.mark.parametrize("rho_tilde, h", [(1, 3), (2, 4), (3, 5), (4, 5), (8, 6), (12, 7)])
    def test_class_count(self, rho_tilde, h):
        assert class_count(rho_tilde) == h

    def test_class_boundaries_are_half_open(self):
        classing = WeightClassing(16.0, 2)
        assert classing.h == 4
        assert classing.class_of(16.0) == 4
        assert classing.class_of(8.0) == 3
        assert classing.class_of(8.000001) == 4
        assert classing.class_of(1.5) == 1

    def test_out_of_range_weights(self):
        classing = WeightClassing(16.0, 2)
        with pytest.raises(OutOfPromiseError):
            classing.class_of(1.0)
        with pytest.raises(OutOfPromiseError):
            classing.class_of(16.5)
        assert classing.try_class_of(0.5) is None

    def test_promise_floor_lies_inside_class_one(self):
        classing = WeightClassing(100.0, 5)
        assert classing.promise_floor() >= classing.lower(1)

    def test_in_promise_is_narrower_than_the_classed_range(self):
        classing = WeightClassing(1.0, 3)
        assert classing.lower(1) == 1 / 32
        assert class_of(classing, 0.035) == 1
        assert not classing.in_promise(0.035)
        assert classing.in_promise(0.05)
        assert not classing.in_promise(1.5)

    @given(st.floats(min_value=1e-3, max_value=1.0), st.integers(min_value=1, max_value=64))
    @settings(max_examples=200, deadline=None)
    def test_class_contains_weight(self, fraction, rho_tilde):
        classing = WeightClassing(1.0, rho_tilde)
        weight = max(fraction, classing.promise_floor() * 1.0001)
        i = classing.class_of(weight)
        assert classing.lower(i) < weight <= classing.upper(i)

    @given(st.lists(st.floats(min_value=0.2, max_value=1.0), min_size=2, max_size=10))
    @settings(max_examples=100, deadline=None)
    def test_class_is_monotone_in_weight(self, weights):
        classing = WeightClassing(1.0, 1)
        ordered = sorted(weights)
        classes = [classing.class_of(x) for x in ordered]
        assert classes == sorted(classes)


class TestBucketing:
    def test_tau_max(self):
        assert [tau_max(h) for h in (3, 4, 6, 7, 8)] == [2, 3, 3, 3, 4]

    def test_tau_zero_gives_singletons(self):
        assert make_bucketing(5, RandomBucketingParams(0, 0)) == Bucketing.singletons(5)

    def test_shifted_buckets(self):
        assert make_bucketing(4, RandomBucketingParams(1, 1)).serialize() == "1:1,2:3,4:4"
        assert make_bucketing(6, RandomBucketingParams(2, 0)).serialize() == "1:4,5:6"

    @pytest.mark.parametrize("h, expected", [(6, "1:1,2:5,6:6"), (10, "1:1,2:5,6:9,10:10")])
    def test_width_four_shift_three(self, h, expected):
        bucketing = make_bucketing(h, RandomBucketingParams(2, 3))
        assert bucketing.serialize() == expected
        assert bucketing.b == -(-(h + 3) // 4)

    def test_every_legal_bucketing_up_to_64_classes(self):
        checked = 0
        for h in range(1, 65):
            for params in all_params(h):
                bucketing = make_bucketing(h, params)
                bucketing.validate()
                assert [c for i in range(1, bucketing.b + 1) for c in bucketing.classes_in(i)] == list(range(1, h + 1))
                checked += 1
        assert checked == sum(2 ** (tau_max(h) + 1) - 1 for h in range(1, 65))

    def test_conventions_outside_the_range(self):
        bucketing = make_bucketing(6, RandomBucketingParams(2, 0))
        assert bucketing.f(0) == 0
        assert bucketing.classes_at_or_above(3) == range(0)
        assert list(bucketing.classes_at_or_above(2)) == [5, 6]
        assert bucketing.bucket_of(4) == 1

    def test_parse_round_trip_and_rejects_gaps(self):
        assert Bucketing.parse(4, "1:2,3:4").b == 2
        with pytest.raises(InvalidBucketingError):
            Bucketing.parse(4, "1:1,3:4")
        with pytest.raises(InvalidBucketingError):
            Bucketing.parse(4, "1:2,3:3")
        with pytest.raises(InvalidBucketingError):
            Bucketing.parse(4, "1-4")

    def test_invalid_params(self):
        with pytest.raises(InvalidBucketingError):
            RandomBucketingParams(1, 2).validate(4)
        with pytest.raises(InvalidBucketingError):
            RandomBucketingParams(4, 0).validate(4)

    def test_all_params_count(self):
        assert len(all_params(3)) == 1 + 2 + 4

    def test_bucket_members(self):
        bucketing = Bucketing.parse(3, "1:2,3:3")
        assert bucket_members(bucketing, {0: 1, 1: 3, 2: 2}) == {1: [0, 2], 2: [1]}

    def test_sampled_params_are_valid(self):
        rng = TrialStreams(5)["tau"]
        for _ in range(200):
            sample_params(7, rng).validate(7)

    def test_sampled_params_are_uniform(self):
        rng = TrialStreams(12)["tau"]
        draws = [sample_params(7, rng) for _ in range(40000)]
        taus = np.bincount([d.tau for d in draws], minlength=tau_max(7) + 1)
        assert stats.chisquare(taus).pvalue > 1e-3
        widest = np.bincount([d.delta for d in draws if d.tau == 3], minlength=8)
        assert stats.chisquare(widest).pvalue > 1e-3

    @given(st.integers(min_value=1, max_value=40), st.data())
    @settings(max_examples=200, deadline=None)
    def test_buckets_partition_the_classes(self, h, data):
        tau = data.draw(st.integers(min_value=0, max_value=tau_max(h)))
        delta = data.draw(st.integers(min_value=0, max_value=2 ** tau - 1))
        bucketing = make_bucketing(h, RandomBucketingParams(tau, delta))
        covered = [c for i in range(1, bucketing.b + 1) for c in bucketing.classes_in(i)]
        assert covered == list(range(1, h + 1))
        assert all(len(bucketing.classes_in(i)) <= 2 ** tau for i in range(1, bucketing.b + 1))
        assert bucketing.b == -(-(h + delta) // 2 ** tau)
