"""Order enumeration, elimination tests and knapsack search tests."""

import itertools
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gqprim.arith import (
    BOUNDED,
    ELIMINATE,
    KEEP,
    SOUND,
    STRICT,
    UNBOUNDED,
    KnapsackSolution,
    OrderCandidate,
    divisors,
    enumerate_orders,
    knapsack,
    line_orbit_candidates,
    line_orbits_test,
    orders_of_elements_test,
    prime_divisors,
)


def brute_force_orders(num_points):
    """Oracle: try every j in 2..num_points-1, no divisor shortcuts."""
    out = set()
    for j in range(2, num_points):
        if num_points % j:
            continue
        s = j - 1
        q = num_points // j
        if (q - 1) % s:
            continue
        t = (q - 1) // s
        if s < 2 or t < 2 or s > t * t or t > s * s:
            continue
        if (s * t * (s * t + 1)) % (s + t):
            continue
        out.add((s, t))
    return sorted(out)


def knapsack_oracle(values, target):
    """Oracle: filter the full power-multiset by sum (bounded mode)."""
    values = sorted(values)
    sols = set()
    for r in range(len(values) + 1):
        for combo in itertools.combinations(values, r):
            if sum(combo) == target:
                sols.add(tuple(sorted(combo)))
    return sorted(sols)


class TestOrderCandidate:
    def test_derived_fields(self):
        c = OrderCandidate(4, 8)
        assert c.num_points == 165
        assert c.num_lines == 297

    def test_constraints(self):
        assert OrderCandidate(2, 2).satisfies_constraints()
        assert not OrderCandidate(1, 2).satisfies_constraints()
        assert not OrderCandidate(2, 5).satisfies_constraints()


class TestEnumerateOrders:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (15, [(2, 2)]),
            (165, [(4, 8)]),
            (4180, [(21, 9)]),
            (6, []),
            (1360, [(9, 15)]),
            (325, [(4, 16)]),
            (280, [(9, 3)]),
            (2016, [(13, 11)]),
            (3520, [(9, 39)]),
            (540, [(11, 4)]),
            (27, [(2, 4)]),
            (45, [(4, 2)]),
        ],
    )
    def test_known_point_counts(self, n, expected):
        assert [(c.s, c.t) for c in enumerate_orders(n)] == expected

    def test_every_candidate_satisfies_constraints(self):
        for n in (15, 45, 165, 1360, 4180, 27 * 13, 98280):
            for c in enumerate_orders(n):
                assert c.satisfies_constraints()
                assert c.num_points == n

    def test_matches_brute_force_oracle(self):
        for n in list(range(2, 2000)) + [27000, 100000, 999999]:
            assert [(c.s, c.t) for c in enumerate_orders(n)] == brute_force_orders(n)

    def test_rejects_tiny_input(self):
        with pytest.raises(ValueError):
            enumerate_orders(1)

    def test_large_smooth_input(self):
        # index of a large-format case; must run fast and exactly
        n = 2**18 * 3**9 * 5**2 * 7
        cands = enumerate_orders(n)
        for c in cands:
            assert c.num_points == n

    @settings(max_examples=150, deadline=None)
    @given(st.integers(min_value=2, max_value=200000))
    def test_brute_force_agreement_property(self, n):
        assert [(c.s, c.t) for c in enumerate_orders(n)] == brute_force_orders(n)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=1000, max_value=5 * 10**6))
    def test_sweep_strategies_agree(self, n):
        # the windowed walk and the n-1 divisor route must match the
        # full-sweep answer wherever all three apply
        from gqprim.arith import (_candidate_from_point_divisor,
                                  _candidate_window, _factorint,
                                  _iter_divisors_in)

        lo, hi = _candidate_window(n)
        assert lo >= 3
        via_window = sorted(
            {c for j in _iter_divisors_in(_factorint(n), lo, hi)
             for c in (_candidate_from_point_divisor(n, j),) if c}
        )
        via_pred = sorted(
            {c for s in _iter_divisors_in(_factorint(n - 1), max(2, lo - 1), hi - 1)
             for c in (_candidate_from_point_divisor(n, s + 1),) if c}
        )
        assert via_window == via_pred == enumerate_orders(n)

    def test_window_contains_all_candidates(self):
        from gqprim.arith import _candidate_window

        for n in (15, 165, 280, 325, 540, 1360, 2016, 3520, 4180, 6165913600):
            lo, hi = _candidate_window(n)
            for c in enumerate_orders(n):
                assert lo <= c.s + 1 <= hi

    def test_very_smooth_giant_index(self):
        # divisor counts near 10^8 must not be materialized
        n = 2**46 * 3**20 * 5**9 * 7**6 * 11**2 * 13**3 * 17 * 19 * 29 * 31 * 41 * 59 * 71
        assert enumerate_orders(n) == []

    def test_giant_candidate_survives_windowing(self):
        assert [(c.s, c.t) for c in enumerate_orders(6165913600)] == [(2991, 689)]


class TestDivisorHelpers:
    def test_divisors(self):
        assert divisors(28) == [1, 2, 4, 7, 14, 28]

    def test_prime_divisors(self):
        assert prime_divisors(175560) == [2, 3, 5, 7, 11, 19]


class TestOrdersOfElements:
    def test_small_primes_keep(self):
        cand = OrderCandidate(9, 3)
        assert orders_of_elements_test(1209600, 600, cand) == KEEP

    def test_toy_elimination(self):
        cand = OrderCandidate(2, 2)
        assert orders_of_elements_test(132, 11, cand) == ELIMINATE

    def test_large_prime_not_dividing_lines(self):
        # q = 13 > 3, 13 does not divide 15 and not the stabiliser
        cand = OrderCandidate(2, 2)
        assert orders_of_elements_test(13 * 12, 12, cand) == ELIMINATE

    def test_large_prime_dividing_lines_kept(self):
        # q = 5 > s+1=3, t+1=3 but 5 | num_lines = 15 and not | stab
        cand = OrderCandidate(2, 2)
        assert orders_of_elements_test(5 * 12, 12, cand) == KEEP

    def test_all_primes_small_vacuous_keep(self):
        cand = OrderCandidate(12, 12)
        assert orders_of_elements_test(2**10 * 3**4 * 5 * 7 * 11 * 13, 2, cand) == KEEP

    def test_requires_divisibility(self):
        with pytest.raises(ValueError):
            orders_of_elements_test(100, 7, OrderCandidate(2, 2))


class TestKnapsack:
    def test_spec_example(self):
        sols = knapsack([2, 3, 5], 5)
        assert sorted(tuple(s.parts()) for s in sols) == [(2, 3), (5,)]

    def test_m11_neighborhood_sums(self):
        sols = knapsack([8, 12, 24, 24, 24, 24, 48], 36)
        assert [s.parts() for s in sols] == [[12, 24]]

    def test_unreachable_target(self):
        assert knapsack([2, 3], 1) == []

    def test_target_zero_single_empty_solution(self):
        sols = knapsack([2, 3], 0)
        assert len(sols) == 1
        assert sols[0].parts() == []

    def test_bounded_respects_multiplicities(self):
        assert [s.parts() for s in knapsack([2, 2, 3], 7, mode=BOUNDED)] == [[2, 2, 3]]
        assert knapsack([2, 3], 6, mode=BOUNDED) == []

    def test_unbounded_reuses_values(self):
        sols = knapsack([2, 3], 6, mode=UNBOUNDED)
        parts = {tuple(s.parts()) for s in sols}
        assert parts == {(2, 2, 2), (3, 3)}

    def test_lexicographic_solution_order(self):
        sols = knapsack([1, 2, 3], 3, mode=UNBOUNDED)
        assert [s.multiplicities for s in sols] == sorted(s.multiplicities for s in sols)

    def test_solutions_sum_to_target(self):
        for s in knapsack([4, 6, 10, 15], 25, mode=UNBOUNDED):
            assert s.total() == 25

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            knapsack([0, 2], 4)
        with pytest.raises(ValueError):
            knapsack([2], 3, mode="greedy")

    @settings(max_examples=120, deadline=None)
    @given(
        st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=9),
        st.integers(min_value=0, max_value=40),
    )
    def test_bounded_matches_power_multiset_oracle(self, values, target):
        got = sorted(tuple(s.parts()) for s in knapsack(values, target, mode=BOUNDED))
        assert got == knapsack_oracle(values, target)

    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=8),
        st.integers(min_value=1, max_value=30),
    )
    def test_every_solution_within_caps(self, values, target):
        counts = {v: values.count(v) for v in values}
        for s in knapsack(values, target, mode=BOUNDED):
            for v, m in zip(s.values, s.multiplicities):
                assert 0 <= m <= counts[v]
            assert s.total() == target


J1_INDICES = [266, 1045, 1463, 1540, 1596, 2926, 4180]
M11_INDICES = [11, 12, 55, 66, 165]


class TestLineOrbits:
    def test_j1_eliminated(self):
        cand = OrderCandidate(21, 9)
        assert line_orbit_candidates(J1_INDICES, cand) == [7]
        assert line_orbits_test(J1_INDICES, cand, mode=STRICT) == ELIMINATE
        assert line_orbits_test(J1_INDICES, cand, mode=SOUND) == ELIMINATE

    def test_m11_kept(self):
        cand = OrderCandidate(4, 8)
        assert line_orbit_candidates(M11_INDICES, cand) == [1, 2, 4, 5, 5]
        assert line_orbits_test(M11_INDICES, cand, mode=STRICT) == KEEP

    def test_single_index_boundary_divergence(self):
        # one maximal of index k0 = st+1: only candidate count is 1
        cand = OrderCandidate(2, 2)
        assert line_orbits_test([5], cand, mode=STRICT) == ELIMINATE
        assert line_orbits_test([5], cand, mode=SOUND) == KEEP
        assert line_orbits_test([5], cand, mode=SOUND, primitivity_refinement=True) == ELIMINATE

    def test_refinement_discards_t_parts(self):
        # t+1 = 4 reachable only as 3+1 or 1+1+1+1; both use parts in {1,t}
        cand = OrderCandidate(9, 3)
        indices = [28, 84]  # k0 = 28: counts 1 and 3
        assert line_orbits_test(indices, cand, mode=SOUND) == KEEP
        assert (
            line_orbits_test(indices, cand, mode=SOUND, primitivity_refinement=True)
            == ELIMINATE
        )

    def test_sound_never_stricter_than_strict(self):
        cands = [OrderCandidate(2, 2), OrderCandidate(4, 8), OrderCandidate(9, 3)]
        index_sets = [J1_INDICES, M11_INDICES, [2, 100, 280, 315], [5], [3, 9, 15]]
        for cand in cands:
            for indices in index_sets:
                if line_orbits_test(indices, cand, mode=STRICT) == KEEP:
                    assert line_orbits_test(indices, cand, mode=SOUND) == KEEP

    def test_candidate_counts_respect_lcm_bound(self):
        cand = OrderCandidate(4, 8)
        k0 = 33
        for b, k in zip(M11_INDICES, [1, 4, 5, 2, 5]):
            assert lcm(b, k0) // k0 == k

    def test_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            line_orbits_test([], OrderCandidate(2, 2))
        with pytest.raises(ValueError):
            line_orbits_test([1, 5], OrderCandidate(2, 2))
