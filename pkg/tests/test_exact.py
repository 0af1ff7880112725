from fractions import Fraction as F

import pytest

from barriercover import (
    ExactCoverInstance,
    Instance,
    KMoveQuery,
    ResourceLimitError,
    Sensor,
    brute_force,
    brute_force_order_preserving,
    cost,
    fpt_solve,
    kmove_brute_force,
    oracle_optimal,
    reduce_exact_cover,
    scale_instance,
    verify_coverage,
)
from barriercover.exact import gap_candidates

from conftest import random_corpus

I1 = Instance(4, (Sensor(0, 1), Sensor(5, 1)))
COVERING = Instance(4, (Sensor(1, 1), Sensor(3, 1)))


class TestBruteForce:
    def test_two_sensor_optimum(self):
        found = brute_force(I1, 5)
        assert found is not None
        solution, value = found
        assert value == 3
        assert verify_coverage(I1, solution).covered
        assert cost(I1, solution) == 3

    def test_budget_excludes_solution(self):
        assert brute_force(I1, 2) is None

    def test_already_covered_at_zero_budget(self):
        found = brute_force(COVERING, 0)
        assert found is not None and found[1] == 0

    def test_infeasible_is_absent(self):
        assert brute_force(Instance(10, (Sensor(0, 1),)), 50) is None

    def test_node_cap_is_an_error_not_absent(self):
        inst = Instance(12, tuple(Sensor(-8 + 3 * i, 1) for i in range(6)))
        with pytest.raises(ResourceLimitError):
            brute_force(inst, 40, node_cap=5)

    def test_rejects_fractional_input(self):
        inst = Instance(4, (Sensor(F(1, 2), 1), Sensor(3, 1)))
        with pytest.raises(ValueError):
            brute_force(inst, 3)
        with pytest.raises(ValueError):
            brute_force(COVERING, F(1, 2))


class TestOrderPreservingBruteForce:
    def test_matches_unrestricted_when_order_free(self):
        found = brute_force_order_preserving(I1)
        assert found is not None and found[1] == 3

    def test_charges_for_order(self):
        # Unrestricted can send the big sensor across; order-preserving cannot.
        inst = Instance(12, (Sensor(0, 2), Sensor(1, 1), Sensor(3, 1), Sensor(5, 1), Sensor(7, 1)))
        unrestricted = brute_force(inst, 30)
        ordered = brute_force_order_preserving(inst)
        assert unrestricted is not None and unrestricted[1] == 10
        assert ordered is not None and ordered[1] == 18

    def test_absent_when_infeasible(self):
        assert brute_force_order_preserving(Instance(10, (Sensor(0, 1),))) is None


class TestGapCandidates:
    def test_edge_groups(self):
        inst = Instance(10, (Sensor(-3, 1), Sensor(-2, 2), Sensor(13, 2)))
        # Home coverage is empty within [0, 10]: one gap (0, 10).
        cands = gap_candidates(inst, (0, 10), 4)
        assert cands.left == {-2: (0,), 0: (1,)}
        assert cands.right == {11: (2,)}

    def test_longest_trim_and_tie_break(self):
        # Four sensors share the edge point 0; budget 1 keeps the two longest.
        sensors = tuple(Sensor(-r, r) for r in (1, 2, 3, 4))
        inst = Instance(8, sensors)
        cands = gap_candidates(inst, (0, 8), 1)
        members = cands.left[0]
        assert len(members) == 2
        assert [inst.sensors[j].r for j in members] == [4, 3]
        # Equal lengths break ties toward the lower index.
        twins = Instance(8, (Sensor(-2, 2), Sensor(-2, 2), Sensor(-2, 2)))
        cands = gap_candidates(twins, (0, 8), 1)
        assert cands.left[0] == (0, 1)

    def test_excluded_sensors_are_skipped(self):
        inst = Instance(4, (Sensor(-1, 1), Sensor(-1, 1)))
        cands = gap_candidates(inst, (0, 4), 3, exclude=(0,))
        assert cands.sensors() == (1,)


class TestFpt:
    def test_two_sensor_optimum(self):
        found = fpt_solve(I1, 3)
        assert found is not None and found[1] == 3

    def test_budget_excludes_solution(self):
        assert fpt_solve(I1, 2) is None

    def test_gap_measure_bound_fails_fast(self):
        inst = Instance(10, (Sensor(20, 1),))
        assert fpt_solve(inst, 3) is None

    def test_rejects_fractional_input(self):
        inst = Instance(4, (Sensor(F(1, 2), 1),))
        with pytest.raises(ValueError):
            fpt_solve(inst, 3)

    def test_agrees_with_oracle_on_corpus(self):
        for _, inst, budget in random_corpus(60):
            expected = brute_force(inst, budget)
            got = fpt_solve(inst, budget)
            assert (expected is None) == (got is None)
            if expected is not None:
                assert expected[1] == got[1]
                assert verify_coverage(inst, got[0]).covered
                assert cost(inst, got[0]) <= budget

    def test_budget_monotonicity(self):
        for _, inst, budget in random_corpus(30):
            if fpt_solve(inst, budget) is not None:
                assert fpt_solve(inst, budget + 1) is not None


class TestKMove:
    def test_reduction_yes_instance(self):
        ec = ExactCoverInstance(2, (frozenset({1}), frozenset({1, 2}), frozenset({2})), 2)
        red = reduce_exact_cover(ec)
        doubled = scale_instance(red.instance, 2)
        found = kmove_brute_force(doubled, KMoveQuery(red.budget * 2, red.movers))
        assert found is not None
        assert verify_coverage(doubled, found).covered

    def test_zero_movers_on_uncovered_instance(self):
        assert kmove_brute_force(I1, KMoveQuery(10, 0)) is None

    def test_unconstrained_feasible(self):
        found = kmove_brute_force(I1, KMoveQuery(100, I1.n))
        assert found is not None
        assert verify_coverage(I1, found).covered

    def test_estimate_cap(self):
        inst = Instance(40, tuple(Sensor(5 * i, 2) for i in range(8)))
        with pytest.raises(ResourceLimitError):
            kmove_brute_force(inst, KMoveQuery(100, 8), state_cap=1000)

    def test_query_validation(self):
        with pytest.raises(ValueError):
            KMoveQuery(-1, 0)
        with pytest.raises(ValueError):
            KMoveQuery(0, -1)


class TestOracleOptimal:
    def test_solution_is_a_witness(self):
        for _, inst, _ in random_corpus(40):
            found = oracle_optimal(inst)
            if found is None:
                continue
            solution, value = found
            assert verify_coverage(inst, solution).covered
            assert cost(inst, solution) == value
            assert all(v.denominator == 1 for v in solution)

    def test_none_only_when_infeasible(self):
        assert oracle_optimal(Instance(10, (Sensor(0, 1),))) is None
