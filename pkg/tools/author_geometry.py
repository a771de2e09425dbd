"""Author the standalone quadrangle and group files for the line-orbit runs.

W(3,2) is built from the duad/syntheme model on six letters; its four
point-transitive subgroups come from explicit degree-6 generators whose
induced duad actions are asserted. H(3,9) is extracted through the pipeline
from PSL(3,4) acting on the cosets of a Sylow-3 normalizer, and the group
file stores the same action so the two files share point labels.
"""

from __future__ import annotations

import itertools
import random

import gflib as gf
import groupmodels as gm
from gqprim import CaseInput, Permutation, PermGroup, PipelineOptions, run_case
from gqprim.arith import SOUND
from gqprim.bundleio import save_gq
from gqprim.gq import (HEMISYSTEM, LINE_TRANSITIVE, OTHER, QuadrangleData,
                       line_orbits)
from gqprim.permgroup import coset_action

DUADS = [frozenset(p) for p in itertools.combinations(range(1, 7), 2)]
DUAD_INDEX = {d: i + 1 for i, d in enumerate(DUADS)}


def synthemes():
    """All partitions of {1..6} into three duads, as sorted index triples."""
    out = []
    for a, b, c in itertools.combinations(DUADS, 3):
        if len(a | b | c) == 6:
            out.append(tuple(sorted((DUAD_INDEX[a], DUAD_INDEX[b], DUAD_INDEX[c]))))
    return sorted(out)


def on_duads(g6: Permutation) -> Permutation:
    images = [0] * 15
    for d, i in DUAD_INDEX.items():
        images[i - 1] = DUAD_INDEX[frozenset(g6.apply(x) for x in d)]
    return Permutation.from_images(images)


def duad_group(cycles, degree=6) -> PermGroup:
    gens = [on_duads(gm.perm_from_cycles(degree, c)) for c in cycles]
    return PermGroup(gens, degree=15)


def author_w32():
    lines = synthemes()
    assert len(lines) == 15
    w32 = QuadrangleData.from_lines(15, 2, 2, lines, name="W(3,2)").verify()

    # the only point-transitive subgroup classes of S6 on the duads:
    # the transitive A5 and S5 inside PGL(2,5), then A6 and S6
    a5 = duad_group([[(1, 2, 3, 4, 5)], [(1, 6), (3, 4)]])
    s5 = duad_group([[(1, 2, 3, 4, 5)], [(1, 6), (3, 4)], [(2, 3, 5, 4)]])
    a6 = duad_group([[(1, 2, 3, 4, 5)], [(4, 5, 6)]])
    s6 = duad_group([[(1, 2, 3, 4, 5, 6)], [(1, 2)]])
    expected = [
        ("A5", a5, 60, (5, 10), (1, 2), OTHER),
        ("S5", s5, 120, (5, 10), (1, 2), OTHER),
        ("A6", a6, 360, (15,), (3,), LINE_TRANSITIVE),
        ("S6", s6, 720, (15,), (3,), LINE_TRANSITIVE),
    ]
    for name, grp, order, sizes, ks, cls in expected:
        assert grp.order == order, (name, grp.order)
        assert len(grp.orbit(1)) == 15, name
        rep = line_orbits(w32, grp)
        assert rep.orbit_sizes == sizes, (name, rep.orbit_sizes)
        assert rep.k_values == ks, (name, rep.k_values)
        assert rep.classification == cls, (name, rep.classification)

    path = gm.DATA_DIR / "w32.json"
    save_gq(str(path), w32)
    print(f"wrote {path} ({path.stat().st_size} bytes)")
    for name, grp, _, _, _, _ in expected:
        gm.write_group_file(
            f"w32_{name.lower()}.json", name=name, group=grp,
            provenance="induced duad action of explicit degree-6 generators")


def perm_pow(p: Permutation, k: int) -> Permutation:
    out = p
    for _ in range(k - 1):
        out = out * p
    return out


def build_psl34(seed: int):
    """PSL(3,4) on the 21 points of PG(2,4), from random elementary matrices."""
    F = gf.GF(2, 2)
    pts = gf.proj_points(F, 3)
    assert len(pts) == 21
    idx = {p: i for i, p in enumerate(pts)}
    rng = random.Random(seed)
    nonzero = [a for a in F.elements() if a]
    gens = []
    while True:
        i, j = rng.sample(range(3), 2)
        lam = rng.choice(nonzero)
        M = tuple(tuple(lam if (r, c) == (i, j) else (1 if r == c else 0)
                        for c in range(3)) for r in range(3))
        assert gf.det(F, M) == 1
        p = Permutation.from_images(gf.perm_on_points(F, M, pts, idx))
        if p.is_identity():
            continue
        gens.append(p)
        grp = PermGroup(gens, degree=21)
        if grp.order == 20160:
            return grp, gens
        if len(gens) > 8:
            gens = gens[:1]


def sylow3_normalizer(L34: PermGroup, gens, seed: int):
    rng = random.Random(seed)
    while True:
        g = L34.random_element(rng)
        k = g.order()
        if k % 3 == 0:
            x = perm_pow(g, k // 3)
            if x.order() == 3:
                break
    powers = {x.key(), (x * x).key()}
    while True:
        r = L34.random_element(rng)
        y = r.inverse() * x * r
        if y.key() in powers or (x * y).key() != (y * x).key():
            continue
        syl = PermGroup([x, y], degree=21)
        if syl.order == 9:
            break
    obj = frozenset(tuple(p.images) for p in syl.elements())

    def conj_object(g, o):
        return frozenset(gm.conj_act(g, t) for t in o)

    norm, orbit = gm.object_stabilizer(gens, gens, conj_object, obj,
                                       L34.order, expect_orbit=280)
    assert norm.order == 72
    return norm


def author_h39():
    L34, gens = build_psl34(71)
    N72 = sylow3_normalizer(L34, gens, 72)

    case = CaseInput(group_name="PSL(3,4)", group_order=L34.order,
                     maximal_name="3^2:Q8", index=280, maximal_order=72,
                     all_indices=[21, 56, 120, 280], group=L34, maximal=N72)
    rec = run_case(case, PipelineOptions(mode=SOUND))
    assert [(c.s, c.t) for c in rec.candidates] == [(9, 3)]
    # three orbital combinations each carry a copy of the same quadrangle
    assert rec.gq_names == ["H(3,9)"] * 3, rec.gq_names
    found = rec.candidates[0].quadrangle_objects[0]

    act = coset_action(L34, N72)
    g280 = PermGroup([Permutation.from_images([int(v) for v in im])
                      for im in act.generator_images])
    assert g280.order == L34.order
    rep = line_orbits(found, g280)
    assert rep.orbit_sizes == (56, 56), rep.orbit_sizes
    assert rep.k_values == (2, 2)
    assert rep.classification == HEMISYSTEM

    named = QuadrangleData.from_lines(found.point_count, found.s, found.t,
                                      found.lines, name="H(3,9)").verify()
    path = gm.DATA_DIR / "h39.json"
    save_gq(str(path), named)
    print(f"wrote {path} ({path.stat().st_size} bytes)")

    small = PermGroup(gm.reduce_generators(g280, 181), degree=280)
    assert small.order == L34.order
    rep2 = line_orbits(named, small)
    assert rep2.orbit_sizes == (56, 56) and rep2.classification == HEMISYSTEM
    gm.write_group_file(
        "h39_psl34.json", name="PSL(3,4)", group=small,
        provenance="coset action of PSL(3,4) on a Sylow-3 normalizer, "
                   "matching the point labels of h39.json")


if __name__ == "__main__":
    author_w32()
    author_h39()
    print("geometry files done")
