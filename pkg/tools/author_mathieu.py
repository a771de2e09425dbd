"""Author the four Mathieu-group bundles from standard cycle generators.

Orders are asserted against the stabilizer chain; every index-only maximal is
pushed through the screening pipeline and the surviving-candidate count is
asserted before anything is written.
"""

from __future__ import annotations

import random

import groupmodels as gm
from gqprim import CaseInput, PermGroup, PipelineOptions, Permutation, run_case
from gqprim.arith import enumerate_orders


def screen(name, order, sub_name, index, sub_order, all_indices):
    case = CaseInput(group_name=name, group_order=order, maximal_name=sub_name,
                     index=index, maximal_order=sub_order,
                     all_indices=all_indices)
    return run_case(case, PipelineOptions())


def assert_all_eliminated(name, order, pairs):
    indices = [i for i, _ in pairs]
    for i, o in pairs:
        rec = screen(name, order, f"idx{i}", i, o, indices)
        assert not rec.surviving_candidates, (name, i, rec.candidates)


def author_m11():
    a = gm.perm_from_cycles(11, [tuple(range(1, 12))])
    b = gm.perm_from_cycles(11, [(3, 7, 11, 8), (4, 10, 5, 6)])
    G = PermGroup([a, b])
    assert G.order == 7920

    rng = random.Random(7)
    while True:
        g = G.random_element(rng)
        if g.order() % 2 == 0:
            t = g
            for _ in range(g.order() // 2 - 1):
                t = t * g
            assert t.order() == 2
            break
    C, orb = gm.object_stabilizer(G.generators, G.generators, gm.conj_act,
                                  tuple(t.images), G.order, expect_orbit=165)
    assert C.order == 48

    indices = [11, 12, 55, 66, 165]
    for i, o in [(11, 720), (12, 660), (55, 144), (66, 120)]:
        assert enumerate_orders(i) == []
        rec = screen("M11", 7920, f"idx{i}", i, o, indices)
        assert not rec.surviving_candidates

    case = CaseInput(group_name="M11", group_order=7920, maximal_name="2.S4",
                     index=165, maximal_order=48, all_indices=indices,
                     group=G, maximal=C)
    rec = run_case(case, PipelineOptions())
    assert [(c.s, c.t) for c in rec.candidates] == [(4, 8)]
    assert rec.candidates[0].surviving
    assert rec.subdegrees == [8, 12, 24, 24, 24, 24, 48]
    assert rec.candidates[0].combination_count == 4
    assert not any(v["passed"] for v in rec.candidates[0].srg_verdicts)
    assert not rec.candidates[0].quadrangles

    gm.write_bundle(
        "m11.json", name="M11", group=G,
        provenance="standard generators: an 11-cycle and (3,7,11,8)(4,10,5,6); "
                   "order 7920 verified by stabilizer chain",
        maximals=[
            gm.maximal_entry("M10", index=11, order=720,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("L2(11)", index=12, order=660,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("3^2:Q8.2", index=55, order=144,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("S5", index=66, order=120,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("2.S4", group=G, sub=C, reduce_seed=152,
                             provenance="centralizer of an involution, computed as "
                                        "the stabilizer of the involution under "
                                        "conjugation (class size 165, Schreier "
                                        "generators)"),
        ])


def author_m12():
    a = gm.perm_from_cycles(12, [tuple(range(1, 12))])
    b = gm.perm_from_cycles(12, [(3, 7, 11, 8), (4, 10, 5, 6)])
    c = gm.perm_from_cycles(12, [(1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10)])
    G = PermGroup([a, b, c])
    assert G.order == 95040

    pairs = [(12, 7920), (12, 7920), (66, 1440), (66, 1440), (144, 660),
             (220, 432), (220, 432), (396, 240), (495, 192), (495, 192),
             (1320, 72)]
    assert_all_eliminated("M12", 95040, pairs)

    names = ["M11", "M11", "A6.2^2", "A6.2^2", "L2(11)", "3^2.2S4", "3^2.2S4",
             "2xS5", "2^{1+4}:S3", "4^2:D12", "A4xS3"]
    gm.write_bundle(
        "m12.json", name="M12", group=G,
        provenance="standard generators: the M11 pair fixing the twelfth point "
                   "plus an outer involution; order 95040 verified by stabilizer "
                   "chain",
        maximals=[gm.maximal_entry(n, index=i, order=o,
                                   provenance="order from standard subgroup "
                                              "structure tables; index-only entry")
                  for n, (i, o) in zip(names, pairs)])


def author_m23():
    a = gm.perm_from_cycles(23, [tuple(range(1, 24))])
    b = gm.perm_from_cycles(23, [(3, 17, 10, 7, 9), (4, 13, 14, 19, 5),
                                 (8, 18, 11, 12, 23), (15, 20, 22, 21, 16)])
    G = PermGroup([a, b])
    assert G.order == 10200960

    pairs = [(23, 443520), (253, 40320), (253, 40320), (506, 20160),
             (1288, 7920), (1771, 5760), (40320, 253)]
    assert_all_eliminated("M23", 10200960, pairs)

    names = ["M22", "L3(4):2", "2^4:A7", "A8", "M11", "2^4:(3xA5):2", "23:11"]
    gm.write_bundle(
        "m23.json", name="M23", group=G,
        provenance="standard generators: a 23-cycle and a product of five "
                   "5-cycles; order 10200960 verified by stabilizer chain",
        maximals=[gm.maximal_entry(n, index=i, order=o,
                                   provenance="order from standard subgroup "
                                              "structure tables; index-only entry")
                  for n, (i, o) in zip(names, pairs)])
    return G


def author_m22(m23: PermGroup):
    stab = m23.stabilizer(23)
    assert stab.order == 443520
    gens = gm.reduce_generators(stab, 161)
    trunc = [Permutation.from_images(g.images[:22]) for g in gens]
    G = PermGroup(trunc, degree=22)
    assert G.order == 443520

    pairs = [(22, 20160), (77, 5760), (176, 2520), (176, 2520), (231, 1920),
             (330, 1344), (616, 720), (672, 660)]
    assert_all_eliminated("M22", 443520, pairs)

    names = ["L3(4)", "2^4:A6", "A7", "A7", "2^4:S5", "2^3:L3(2)", "M10",
             "L2(11)"]
    gm.write_bundle(
        "m22.json", name="M22", group=G,
        provenance="point stabilizer of the last point inside the 23-point "
                   "group, restricted to the remaining 22 points; order 443520 "
                   "verified by stabilizer chain",
        maximals=[gm.maximal_entry(n, index=i, order=o,
                                   provenance="order from standard subgroup "
                                              "structure tables; index-only entry")
                  for n, (i, o) in zip(names, pairs)])


if __name__ == "__main__":
    author_m11()
    author_m12()
    m23 = author_m23()
    author_m22(m23)
    print("mathieu bundles done")
