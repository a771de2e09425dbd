"""Quadrangle axioms, extraction, duality and line-orbit analysis."""

import itertools

import pytest

from gqprim.arith import OrderCandidate
from gqprim.errors import MalformedInputError, NotAnAutomorphismError
from gqprim.gq import (
    HEMISYSTEM,
    LINE_TRANSITIVE,
    OTHER,
    PseudoGeometric,
    QuadrangleData,
    classify_quadrangle,
    extract_gq,
    line_orbits,
    verify_cover,
)
from gqprim.graphs import check_srg
from gqprim.permgroup import PermGroup, Permutation

DUADS = [frozenset(p) for p in itertools.combinations(range(1, 7), 2)]
DUAD_INDEX = {d: i + 1 for i, d in enumerate(DUADS)}


def w32_lines():
    """Oracle model: partitions of six letters into three duads."""
    out = []
    for a, b, c in itertools.combinations(DUADS, 3):
        if len(a | b | c) == 6:
            out.append(tuple(sorted((DUAD_INDEX[a], DUAD_INDEX[b], DUAD_INDEX[c]))))
    return sorted(out)


def w32():
    return QuadrangleData.from_lines(15, 2, 2, w32_lines(), name="W(3,2)")


def duad_perm(cycles):
    g6 = {x: x for x in range(1, 7)}
    for cyc in cycles:
        for i, x in enumerate(cyc):
            g6[x] = cyc[(i + 1) % len(cyc)]
    images = [0] * 15
    for d, i in DUAD_INDEX.items():
        images[i - 1] = DUAD_INDEX[frozenset(g6[x] for x in d)]
    return Permutation.from_images(images)


class TestAxioms:
    def test_syntheme_model_verifies(self):
        gq = w32().verify()
        assert gq.line_count == 15
        assert gq.first_axiom_failure() is None

    def test_thin_orders_rejected(self):
        gq = QuadrangleData.from_lines(4, 1, 1, [(1, 2), (3, 4), (1, 3), (2, 4)])
        assert "thickness" in gq.first_axiom_failure()

    def test_wrong_line_count(self):
        gq = QuadrangleData.from_lines(15, 2, 2, w32_lines()[:-1])
        assert "line count" in gq.first_axiom_failure()
        with pytest.raises(MalformedInputError):
            gq.verify()

    def test_duplicate_lines(self):
        lines = w32_lines()
        lines[0] = lines[1]
        assert "duplicate" in QuadrangleData.from_lines(15, 2, 2, lines).first_axiom_failure()

    def test_two_lines_through_a_pair(self):
        lines = w32_lines()
        # rewrite one line to reuse an existing collinear pair
        a, b, _ = lines[0]
        lines[-1] = tuple(sorted((a, b, 15)))
        failure = QuadrangleData.from_lines(15, 2, 2, lines).first_axiom_failure()
        assert failure is not None

    def test_point_on_wrong_line_count(self):
        lines = [tuple(sorted((a, b, c))) for a, b, c in w32_lines()]
        lines[0] = (lines[0][0], lines[0][1], 15 if lines[0][2] != 15 else 14)
        failure = QuadrangleData.from_lines(15, 2, 2, lines).first_axiom_failure()
        assert failure is not None

    def test_lines_through(self):
        gq = w32()
        for p in range(1, 16):
            assert len(gq.lines_through(p)) == 3


class TestExtraction:
    def test_w32_round_trip(self):
        gq = w32().verify()
        g = gq.collinearity_graph()
        cand = OrderCandidate(2, 2)
        assert check_srg(g, cand).passed
        back = extract_gq(g, cand)
        assert isinstance(back, QuadrangleData)
        assert back.lines == gq.lines
        assert sorted(back.collinearity_graph().edges()) == sorted(g.edges())

    def test_rook_grid_is_too_thin(self):
        from test_graphs import rook_4x4

        out = extract_gq(rook_4x4(), OrderCandidate(3, 1))
        assert isinstance(out, PseudoGeometric)
        assert "thickness" in out.reason

    def test_shrikhande_is_pseudo_geometric(self):
        from test_graphs import shrikhande

        out = extract_gq(shrikhande(), OrderCandidate(3, 1))
        assert isinstance(out, PseudoGeometric)
        assert "clique" in out.reason

    def test_srg_precondition_enforced(self):
        from test_graphs import graph_from_pairs

        g = graph_from_pairs(4, [(1, 2)])
        with pytest.raises(MalformedInputError):
            extract_gq(g, OrderCandidate(2, 2))


class TestDuality:
    def test_dual_verifies_with_swapped_order(self):
        gq = w32().verify()
        d = gq.dual().verify()
        assert (d.s, d.t) == (2, 2)
        assert d.point_count == 15 and d.line_count == 15

    def test_double_dual_is_isomorphic_in_size(self):
        gq = w32()
        dd = gq.dual().dual()
        assert dd.point_count == gq.point_count
        assert dd.line_count == gq.line_count


class TestClassification:
    def test_small_names(self):
        assert classify_quadrangle(w32()) == "W(3,2)"


class TestLineOrbits:
    def test_line_transitive_group(self):
        gq = w32().verify()
        s6 = PermGroup([duad_perm([(1, 2, 3, 4, 5, 6)]), duad_perm([(1, 2)])])
        rep = line_orbits(gq, s6)
        assert rep.orbit_sizes == (15,)
        assert rep.k_values == (3,)
        assert rep.classification == LINE_TRANSITIVE

    def test_spread_plus_remainder(self):
        gq = w32().verify()
        a5 = PermGroup([duad_perm([(1, 2, 3, 4, 5)]), duad_perm([(1, 6), (3, 4)])])
        rep = line_orbits(gq, a5)
        assert rep.orbit_sizes == (5, 10)
        assert rep.k_values == (1, 2)
        assert rep.classification == OTHER
        st1 = gq.s * gq.t + 1
        assert all(size % st1 == 0 for size in rep.orbit_sizes)

    def test_non_automorphism_rejected(self):
        gq = w32().verify()
        images = list(range(1, 16))
        images[0], images[1] = images[1], images[0]
        swap = PermGroup([Permutation.from_images(images)])
        with pytest.raises(NotAnAutomorphismError):
            line_orbits(gq, swap)

    def test_degree_mismatch_rejected(self):
        gq = w32().verify()
        with pytest.raises(MalformedInputError):
            line_orbits(gq, PermGroup([Permutation.from_images([2, 1])]))


class TestCovers:
    def test_full_line_set_covers_t_plus_one(self):
        gq = w32().verify()
        assert verify_cover(gq, gq.lines) == gq.t + 1

    def test_single_line_is_not_a_cover(self):
        gq = w32().verify()
        assert verify_cover(gq, [gq.lines[0]]) is None

    def test_spread_covers_once(self):
        gq = w32().verify()
        a5 = PermGroup([duad_perm([(1, 2, 3, 4, 5)]), duad_perm([(1, 6), (3, 4)])])
        rep = line_orbits(gq, a5)
        spread = [gq.lines[i] for i in rep.orbits[0]]
        assert len(spread) == 5
        assert verify_cover(gq, spread) == 1
