"""Stabilizer chain, membership, coset action and pairing tests."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gqprim.errors import MalformedInputError, NotASubgroupError, ResourceLimitError
from gqprim.permgroup import (
    PermGroup,
    Permutation,
    build_group,
    coset_action,
    orbital_pairing,
    subgroup_index,
)

A6_GENS = [[2, 3, 1, 4, 5, 6], [1, 3, 4, 5, 6, 2]]
# stabilizer of the pair {5,6} inside A6, isomorphic to S4
S4_PAIR_GENS = [[2, 3, 4, 1, 6, 5], [2, 1, 3, 4, 6, 5]]


def naive_closure(images_lists, cap=20000):
    """Oracle: BFS closure over tuples, independent of the chain code."""
    n = len(images_lists[0])
    gens = [tuple(x - 1 for x in g) for g in images_lists]
    ident = tuple(range(n))
    seen = {ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for g in gens:
            y = tuple(g[p] for p in x)
            if y not in seen:
                assert len(seen) < cap, "oracle cap exceeded"
                seen.add(y)
                queue.append(y)
    return seen


class TestPermutation:
    def test_roundtrip_images(self):
        p = Permutation.from_images([3, 1, 2, 4])
        assert p.images == [3, 1, 2, 4]
        assert p.apply(1) == 3

    def test_compose_then_apply(self):
        p = Permutation.from_images([2, 3, 1])
        q = Permutation.from_images([1, 3, 2])
        for x in (1, 2, 3):
            assert (p * q).apply(x) == q.apply(p.apply(x))
        assert (p * q).apply(1) == 3

    def test_inverse(self):
        p = Permutation.from_images([4, 1, 3, 5, 2])
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()

    def test_rejects_non_bijection(self):
        with pytest.raises(MalformedInputError):
            Permutation.from_images([1, 1, 3])
        with pytest.raises(MalformedInputError):
            Permutation.from_images([0, 1, 2])
        with pytest.raises(MalformedInputError):
            Permutation.from_images([2, 3, 4])

    def test_cycles(self):
        p = Permutation.from_images([2, 1, 3, 5, 6, 4])
        assert p.cycles() == [(1, 2), (4, 5, 6)]

    @given(st.permutations(list(range(1, 8))))
    def test_inverse_roundtrip_property(self, images):
        p = Permutation.from_images(list(images))
        assert p.inverse().inverse() == p
        assert (p * p.inverse()).is_identity()


class TestChain:
    def test_a6_order(self):
        g = build_group(A6_GENS)
        assert g.order == 360

    def test_a6_alternative_generators_agree(self):
        g = build_group([[2, 3, 4, 5, 1, 6], [1, 2, 3, 5, 6, 4]])
        g2 = build_group([[1, 3, 4, 5, 6, 2], [2, 3, 1, 4, 5, 6]])
        assert g.order == g2.order == 360

    def test_trivial_group(self):
        g = build_group([], degree=5)
        assert g.order == 1
        assert g.contains(Permutation.identity(5))

    def test_order_matches_naive_closure_s5(self):
        gens = [[2, 3, 4, 5, 1], [2, 1, 3, 4, 5]]
        assert build_group(gens).order == len(naive_closure(gens)) == 120

    def test_order_matches_naive_closure_dihedral(self):
        gens = [[2, 3, 4, 5, 6, 7, 1], [1, 7, 6, 5, 4, 3, 2]]
        assert build_group(gens).order == len(naive_closure(gens)) == 14

    def test_membership(self):
        g = build_group(A6_GENS)
        assert g.contains(Permutation.from_images([2, 1, 4, 3, 5, 6]))
        assert not g.contains(Permutation.from_images([2, 1, 3, 4, 5, 6]))

    def test_sift_residue_of_member_is_identity(self):
        g = build_group(A6_GENS)
        rng = random.Random(11)
        for _ in range(50):
            assert g.sift(g.random_element(rng)).is_identity()

    def test_verify_random_words(self):
        build_group(A6_GENS).verify_random_words(seed=3, count=100)

    def test_elements_cap(self):
        g = build_group(A6_GENS)
        with pytest.raises(ResourceLimitError):
            g.elements(limit=100)

    def test_mixed_degrees_rejected(self):
        with pytest.raises(MalformedInputError):
            build_group([[2, 1], [2, 3, 1]])

    def test_orbit_and_stabilizer_sizes(self):
        g = build_group(A6_GENS)
        assert g.orbit(1) == {1, 2, 3, 4, 5, 6}
        stab = g.stabilizer(6)
        assert stab.order == 60
        assert g.order == len(g.orbit(6)) * stab.order

    @settings(max_examples=40, deadline=None)
    @given(
        st.lists(
            st.permutations(list(range(1, 7))),
            min_size=1,
            max_size=3,
        )
    )
    def test_order_equals_closure_size_property(self, gens):
        gens = [list(g) for g in gens]
        assert build_group(gens).order == len(naive_closure(gens))


class TestSubgroupIndex:
    def test_a6_s4_index(self):
        g = build_group(A6_GENS)
        m = build_group(S4_PAIR_GENS)
        assert m.order == 24
        assert subgroup_index(g, m) == 15

    def test_whole_group_index_one(self):
        g = build_group(A6_GENS)
        assert subgroup_index(g, build_group(A6_GENS)) == 1

    def test_non_subgroup_rejected(self):
        g = build_group(A6_GENS)
        odd = build_group([[2, 1, 3, 4, 5, 6]])
        with pytest.raises(NotASubgroupError):
            subgroup_index(g, odd)

    def test_degree_mismatch_rejected(self):
        g = build_group(A6_GENS)
        with pytest.raises(NotASubgroupError):
            subgroup_index(g, build_group([[2, 1, 3, 4, 5]]))


def label_word_pairing_oracle(action, suborbit_index):
    """Oracle: find a word w with y^w = base, return suborbit of base^w."""
    arrs = action.generator_label_arrays()
    y = action.suborbits[suborbit_index][0] - 1
    base = action.base_coset - 1
    # BFS in label space from y, tracking the image of base under the word
    seen = {y: base}
    queue = [y]
    while queue:
        x = queue.pop(0)
        for arr in arrs:
            nx = int(arr[x])
            if nx not in seen:
                seen[nx] = int(arr[seen[x]])
                queue.append(nx)
    assert base in seen
    return action.suborbit_of(seen[base] + 1)


class TestCosetAction:
    def setup_method(self):
        self.g = build_group(A6_GENS)
        self.m = build_group(S4_PAIR_GENS)
        self.action = coset_action(self.g, self.m)

    def test_degree_and_base(self):
        assert self.action.degree == 15
        assert self.action.base_coset == 1

    def test_generator_images_are_permutations(self):
        for img in self.action.generator_images:
            assert sorted(img.tolist()) == list(range(1, 16))

    def test_suborbits_partition_non_base_labels(self):
        flat = sorted(x for orb in self.action.suborbits for x in orb)
        assert flat == list(range(2, 16))

    def test_subdegrees(self):
        assert self.action.subdegrees == [6, 8]

    def test_action_is_transitive(self):
        arrs = self.action.generator_label_arrays()
        seen = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            for arr in arrs:
                if int(arr[x]) not in seen:
                    seen.add(int(arr[x]))
                    queue.append(int(arr[x]))
        assert len(seen) == 15

    def test_generator_order_invariance_of_subdegrees(self):
        g2 = build_group(list(reversed(A6_GENS)))
        m2 = build_group(list(reversed(S4_PAIR_GENS)))
        assert coset_action(g2, m2).subdegrees == self.action.subdegrees

    def test_whole_group_action(self):
        act = coset_action(self.g, build_group(A6_GENS))
        assert act.degree == 1
        assert act.suborbits == []

    def test_degree_cap(self):
        tiny = build_group([[1, 2, 3, 4, 5, 6]], degree=6)
        with pytest.raises(ResourceLimitError):
            coset_action(self.g, tiny, degree_cap=100)

    def test_label_action_is_faithful_image(self):
        # the label permutations generate a group of the full order here
        img = build_group([arr.tolist() for arr in self.action.generator_images])
        assert img.order == self.g.order

    def test_stabilizer_images_fix_base(self):
        for arr in self.action.stabilizer_images:
            assert int(arr[0]) == 1


class TestOrbitalPairing:
    def setup_method(self):
        self.g = build_group(A6_GENS)
        self.m = build_group(S4_PAIR_GENS)
        self.action = coset_action(self.g, self.m)

    def test_pairing_is_involution(self):
        n = len(self.action.suborbits)
        for i in range(n):
            j = orbital_pairing(self.action, i)
            assert orbital_pairing(self.action, j) == i

    def test_pairing_preserves_size(self):
        for i in range(len(self.action.suborbits)):
            j = orbital_pairing(self.action, i)
            assert len(self.action.suborbits[i]) == len(self.action.suborbits[j])

    def test_pairing_matches_word_oracle(self):
        for i in range(len(self.action.suborbits)):
            assert orbital_pairing(self.action, i) == label_word_pairing_oracle(self.action, i)

    def test_pairing_on_point_action(self):
        # A6 on cosets of a point stabilizer: natural action, rank 2
        stab = self.g.stabilizer(1)
        act = coset_action(self.g, stab)
        assert act.degree == 6
        assert act.subdegrees == [5]
        assert orbital_pairing(act, 0) == 0

    def test_invalid_index(self):
        with pytest.raises(ValueError):
            orbital_pairing(self.action, 99)
