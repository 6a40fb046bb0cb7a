from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import graphic_matroids, partition_matroids, transversal_matroids
from src.errors import AuditViolation, InfeasibleParametersError, InvalidQueryError
from src.matroid.audit import audit_oracle
from src.matroid.axioms import check_axioms
from src.matroid.families import (GraphicMatroid, LaminarMatroid, PartitionMatroid,
                                  TransversalMatroid, UniformMatroid)
from src.matroid.minor import MinorView, minor_rank
from src.matroid.weights import WeightedGroundSet, greedy_max_weight


def brute_force_rank(m, subset):
    subset = sorted(subset)
    for size in range(len(subset), -1, -1):
        if any(m.is_independent(c) for c in combinations(subset, size)):
            return size
    return 0


class TestFamilies:
    def test_uniform(self, uniform_2_4):
        assert uniform_2_4.is_independent({0, 3})
        assert not uniform_2_4.is_independent({0, 1, 2})
        assert uniform_2_4.full_rank() == 2
        assert uniform_2_4.rank(set()) == 0

    def test_graphic_triangle(self, graphic_triangle):
        assert graphic_triangle.full_rank() == 2
        assert not graphic_triangle.is_independent({0, 1, 2})
        assert graphic_triangle.span_contains({0, 1}, 2)
        assert not graphic_triangle.span_contains({0}, 2)

    def test_graphic_self_loop_is_a_loop(self):
        m = GraphicMatroid(2, [(0, 0), (0, 1)])
        assert not m.is_independent({0})
        assert m.span_contains(set(), 0)

    def test_partition_capacities(self, partition):
        assert partition.full_rank() == 3
        assert partition.is_independent({0, 3, 5})
        assert not partition.is_independent({0, 1})

    def test_partition_must_cover_ground_set(self):
        with pytest.raises(InfeasibleParametersError):
            PartitionMatroid(3, [[0, 1]], [1])

    def test_laminar_nested_capacities(self, laminar):
        assert laminar.full_rank() == 3
        assert not laminar.is_independent({0, 1})
        assert not laminar.is_independent({0, 2, 3})
        assert laminar.is_independent({0, 2, 4})

    def test_laminar_rejects_crossing_sets(self):
        with pytest.raises(InfeasibleParametersError):
            LaminarMatroid(4, [[0, 1], [1, 2]], [1, 1])

    def test_transversal_matching(self, transversal):
        assert transversal.is_independent({0, 1, 3})
        assert not transversal.is_independent({0, 1, 2})
        assert not transversal.is_independent({4})
        assert transversal.full_rank() == 3

    def test_uniform_rank_is_capped_by_n(self):
        assert UniformMatroid(3, 5).full_rank() == 3
        with pytest.raises(InfeasibleParametersError):
            UniformMatroid(3, -1)

    def test_transversal_shared_neighbour(self):
        # two elements adjacent only to the same left vertex are parallel
        m = TransversalMatroid(3, [[0, 1], [2]])
        assert m.is_independent({0, 2})
        assert not m.is_independent({0, 1})
        assert m.span_contains({0}, 1)

    def test_transversal_rejects_unknown_elements(self):
        with pytest.raises(InvalidQueryError):
            TransversalMatroid(2, [[0, 5]])

    def test_unknown_element_is_rejected(self, uniform_2_4):
        with pytest.raises(InvalidQueryError):
            uniform_2_4.rank({7})
        with pytest.raises(InvalidQueryError):
            uniform_2_4.span_contains({0}, 9)

    def test_describe_names_the_family(self, partition):
        assert partition.describe().startswith("partition")


class TestRankAndSpan:
    def test_rank_matches_brute_force(self, instance):
        _, m, _ = instance
        for size in range(m.n + 1):
            for subset in combinations(range(m.n), size):
                assert m.rank(subset) == brute_force_rank(m, subset)

    def test_span_contains_members(self, instance):
        _, m, _ = instance
        assert m.span_contains({0, 1}, 1)

    def test_greedy_optimum_uniform(self, uniform_2_4):
        w = WeightedGroundSet({0: 10, 1: 7, 2: 5, 3: 1})
        opt = greedy_max_weight(uniform_2_4, w)
        assert opt == {0, 1}
        assert w.total(opt) == 17

    def test_greedy_optimum_is_maximum(self, instance):
        _, m, w = instance
        best = 0.0
        for size in range(m.n + 1):
            for subset in combinations(range(m.n), size):
                if m.is_independent(subset):
                    best = max(best, w.total(subset))
        assert w.total(greedy_max_weight(m, w)) == pytest.approx(best)

    def test_weights_must_be_positive(self):
        with pytest.raises(ValueError):
            WeightedGroundSet({0: 1.0, 1: 0.0})

    def test_ties_broken_by_id(self):
        w = WeightedGroundSet({0: 5.0, 1: 5.0})
        assert w.descending([0, 1]) == [1, 0]
        assert w.heaviest() == 1


class TestMinors:
    def test_contraction_rank_formula(self, graphic_triangle):
        minor = MinorView(graphic_triangle, {0})
        assert minor.rank({1}) == 1
        assert minor.rank({1, 2}) == 1
        assert minor_rank(minor, {1, 2}) == graphic_triangle.rank({0, 1, 2}) - graphic_triangle.rank({0})

    def test_contraction_makes_parallel_element_a_loop(self):
        m = GraphicMatroid(2, [(0, 1), (0, 1)])
        minor = MinorView(m, {0})
        assert not minor.is_independent({1})

    def test_restriction_guards_its_ground_set(self, uniform_2_4):
        minor = MinorView(uniform_2_4, {0}, restricted={1, 2})
        assert minor.is_independent({1})
        assert not minor.is_independent({1, 2})
        with pytest.raises(InvalidQueryError):
            minor.rank({3})

    def test_overlapping_contraction_and_restriction(self, uniform_2_4):
        with pytest.raises(InvalidQueryError):
            MinorView(uniform_2_4, {0}, restricted={0, 1})


class TestAudit:
    def test_revealed_queries_pass_through(self, uniform_2_4):
        oracle = audit_oracle(uniform_2_4, revealed={0, 1})
        assert oracle.rank({0, 1}) == 2
        assert len(oracle.queries) == 1
        assert oracle.violations == 0

    def test_unrevealed_query_raises(self, uniform_2_4):
        oracle = audit_oracle(uniform_2_4, revealed={0})
        with pytest.raises(AuditViolation) as excinfo:
            oracle.span_contains({0}, 2)
        assert excinfo.value.unrevealed == {2}
        assert oracle.violations == 1

    def test_reveal_extends_the_view(self, uniform_2_4):
        oracle = audit_oracle(uniform_2_4)
        oracle.reveal(3)
        assert oracle.is_independent({3})
        assert oracle.revealed == {3}


class TestAxioms:
    def test_fixture_instances_are_matroids(self, instance):
        _, m, _ = instance
        assert all(result.passed for result in check_axioms(m, range(m.n)))

    def test_non_matroid_fails_exchange(self):
        class TwoTriangles:
            """Independent sets {0,1}, {2} and subsets: no exchange from {2} into {0,1}"""
            allowed = [set(), {0}, {1}, {2}, {0, 1}]

            def is_independent(self, subset):
                return set(subset) in self.allowed

            def rank(self, subset):
                return max(len(a) for a in self.allowed if a <= set(subset))

        results = {r.axiom: r for r in check_axioms(TwoTriangles(), [0, 1, 2])}
        assert not results["exchange"].passed
        assert results["downward-closure"].passed

    @given(partition_matroids())
    @settings(max_examples=40, deadline=None)
    def test_random_partition_matroids(self, m):
        assert all(result.passed for result in check_axioms(m, range(m.n)))

    @given(graphic_matroids())
    @settings(max_examples=40, deadline=None)
    def test_random_graphic_matroids(self, m):
        assert all(result.passed for result in check_axioms(m, range(m.n)))

    @given(transversal_matroids())
    @settings(max_examples=30, deadline=None)
    def test_random_transversal_matroids(self, m):
        assert all(result.passed for result in check_axioms(m, range(m.n)))

    @given(graphic_matroids())
    @settings(max_examples=25, deadline=None)
    def test_contractions_are_matroids(self, m):
        minor = MinorView(m, {0})
        assert all(result.passed for result in check_axioms(minor, range(1, m.n)))
