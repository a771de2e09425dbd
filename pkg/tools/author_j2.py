"""Author the J2 and J2.2 bundles via the rank-3 graph on 100 vertices.

The graph is assembled from the unitary group U3(3): one extra vertex joined
to the 36 conjugates of an L2(7) subgroup, with adjacency on and between the
36 subgroups and the 63 nonisotropic projective points given by the unique
orbitals of the right valencies.  Its full automorphism group is J2.2.
"""

from __future__ import annotations

import random

import gflib as gf
import groupmodels as gm
from gqprim import CaseInput, PermGroup, Permutation, PipelineOptions, run_case
from gqprim.arith import SOUND
from gqprim.permgroup import coset_action


def build_u33():
    F = gf.GF(3, 2)
    J = gf.antidiag_ones(3)
    iso = gf.isotropic_points(F, J, 3, hermitian=True)
    assert len(iso) == 28
    noniso = [p for p in gf.proj_points(F, 3)
              if gf.form_value(F, J, p, p, True) != 0]
    assert len(noniso) == 63
    idx = {p: i for i, p in enumerate(noniso)}

    rng = random.Random(53)
    lams = gf.trace_zero_elements(F)
    gens = []
    while True:
        v = rng.choice(iso)
        M = gf.unitary_transvection(F, J, v, rng.choice(lams), 3)
        assert gf.preserves_form(F, J, M, True)
        p = Permutation.from_images(gf.perm_on_points(F, M, noniso, idx))
        if p.is_identity():
            continue
        gens.append(p)
        G = PermGroup(gens)
        if G.order == 6048:
            return F, noniso, idx, PermGroup(gm.reduce_generators(G, 54), degree=63)
        if len(gens) > 8:
            gens = gens[:1]


def find_l27(G, rng):
    while True:
        g = G.random_element(rng)
        if g.order() % 7 == 0:
            a = g
            for _ in range(g.order() // 7 - 1):
                a = a * g
            break
    assert a.order() == 7
    while True:
        g = G.random_element(rng)
        if g.order() % 2:
            continue
        s = g
        for _ in range(g.order() // 2 - 1):
            s = s * g
        L = PermGroup([a, s], degree=63)
        if L.order == 168:
            return L


def subgroup_object(L):
    return frozenset(tuple(p.images) for p in L.elements())


def conj_object(g, obj):
    return frozenset(gm.conj_act(g, t) for t in obj)


def point_orbits(gens, degree):
    seen, out = set(), []
    for p in range(1, degree + 1):
        if p in seen:
            continue
        orb, queue = {p}, [p]
        while queue:
            x = queue.pop()
            for g in gens:
                y = g.apply(x)
                if y not in orb:
                    orb.add(y)
                    queue.append(y)
        seen |= orb
        out.append(orb)
    return out


def pair_orbit(gens, pair):
    seen, queue = {pair}, [pair]
    while queue:
        s = queue.pop()
        for g in gens:
            t = gm.set_act(g, s)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def graph_automorphism(masks, src, dst, node_cap=2 * 10**6):
    """Backtracking search for an automorphism mapping src to dst (0-based)."""
    n = len(masks)
    full = (1 << n) - 1
    nodes = 0

    def extend(phi, used, cand):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise TimeoutError("automorphism search exceeded node cap")
        depth = sum(1 for x in phi if x is not None)
        if depth == n:
            return phi
        best, bestc = None, None
        for u in range(n):
            if phi[u] is None:
                c = cand[u].bit_count()
                if c == 0:
                    return None
                if bestc is None or c < bestc:
                    best, bestc = u, c
        u = best
        rem = cand[u]
        while rem:
            w = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            newphi = phi[:]
            newphi[u] = w
            newcand = cand[:]
            ok = True
            for v in range(n):
                if newphi[v] is None:
                    m = newcand[v]
                    m &= masks[w] if (masks[u] >> v) & 1 else ~masks[w]
                    m &= ~(1 << w)
                    if m & full == 0:
                        ok = False
                        break
                    newcand[v] = m & full
            if ok:
                res = extend(newphi, used | (1 << w), newcand)
                if res is not None:
                    return res
        return None

    phi = [None] * n
    cand = [(1 << dst) if v == src else full for v in range(n)]
    return extend(phi, 0, cand)


def hall_janko_graph():
    F, noniso, idx, G63 = build_u33()
    rng = random.Random(59)
    L0 = find_l27(G63, rng)
    obj0 = subgroup_object(L0)
    reach = gm.orbit_transversal(G63.generators, G63.generators,
                                 conj_object, obj0)
    assert len(reach) == 36
    subs = sorted(reach, key=sorted)
    sidx = {o: i for i, o in enumerate(subs)}
    trans = {sidx[o]: u for o, u in reach.items()}

    sub_gens = {}
    for i in range(36):
        u = trans[i]
        ui = u.inverse()
        sub_gens[i] = [ui * g * u for g in L0.generators]

    twenty_one = {}
    for i in range(36):
        orbs = point_orbits(sub_gens[i], 63)
        sizes = sorted(len(o) for o in orbs)
        cands = [o for o in orbs if len(o) == 21]
        if len(cands) != 1:
            raise AssertionError(f"orbit sizes {sizes}: no unique 21-orbit")
        twenty_one[i] = cands[0]

    imgs36 = []
    for g in G63.generators:
        imgs36.append([sidx[conj_object(g, subs[i])] + 1 for i in range(36)])
    g36 = [Permutation.from_images(im) for im in imgs36]
    assert PermGroup(g36, degree=36).order == 6048

    l0_orbits = point_orbits(
        [Permutation.from_images([sidx[conj_object(g, subs[i])] + 1
                                  for i in range(36)])
         for g in L0.generators], 36)
    # rank 4 under U3(3): the 14-valent neighborhood is the two 7-orbits
    sevens = [o for o in l0_orbits if len(o) == 7]
    assert sorted(len(o) for o in l0_orbits) == [1, 7, 7, 21]
    v0 = sidx[obj0] + 1
    e36 = set()
    for o in sevens:
        e36 |= pair_orbit(g36, frozenset({v0, min(o)}))
    assert len(e36) == 252

    stab1 = G63.stabilizer(1)
    orbs1 = point_orbits(stab1.generators, 63)
    sizes = sorted(len(o) for o in orbs1)
    assert sizes == [1, 6, 24, 32], sizes
    rep24 = min(o for o in orbs1 if len(o) == 24)
    e63 = pair_orbit(G63.generators, frozenset({1, min(rep24)}))
    assert len(e63) == 756

    # vertices: 0 = extra, 1..36 = subgroups, 37..99 = points
    n = 100
    masks = [0] * n

    def add_edge(u, v):
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    for i in range(36):
        add_edge(0, 1 + i)
    for pr in e36:
        a, b = sorted(pr)
        add_edge(a, b)
    for i in range(36):
        for p in twenty_one[i]:
            add_edge(1 + i, 36 + p)
    for pr in e63:
        a, b = sorted(pr)
        add_edge(36 + a, 36 + b)

    assert all(m.bit_count() == 36 for m in masks)
    for u in range(n):
        for v in range(u + 1, n):
            c = (masks[u] & masks[v]).bit_count()
            want = 14 if (masks[u] >> v) & 1 else 12
            assert c == want, (u, v, c, want)
    print("strongly regular (100,36,14,12) verified")

    def to100(g63, g36p):
        imgs = [1] + [1 + g36p.apply(i) for i in range(1, 37)] + \
               [37 + g63.apply(p) for p in range(1, 64)]
        return Permutation.from_images(imgs)

    u100 = [to100(g, gp) for g, gp in zip(G63.generators, g36)]

    def is_auto(p):
        return all(masks[p.apply(v + 1) - 1] ==
                   sum(1 << (p.apply(w + 1) - 1)
                       for w in range(n) if (masks[v] >> w) & 1)
                   for v in range(n))

    assert all(is_auto(p) for p in u100)

    f100 = None
    try:
        fro = Permutation.from_images(
            [idx[gf.normalize_point(F, tuple(F.frob_t[x] for x in noniso[p]))] + 1
             for p in range(63)])
        f36 = Permutation.from_images(
            [sidx[conj_object(fro, subs[i])] + 1 for i in range(36)])
        f100 = to100(fro, f36)
        if not is_auto(f100):
            f100 = None
    except KeyError:
        pass
    return masks, u100, f100


def author_j2():
    masks, u100, f100 = hall_janko_graph()
    pool = list(u100) + ([f100] if f100 is not None else [])
    full = PermGroup(pool, degree=100)
    for dst in (50, 1, 99, 20, 70):
        if full.order == 1209600:
            break
        phi = graph_automorphism(masks, 0, dst)
        g = Permutation.from_images([x + 1 for x in phi])
        pool.append(g)
        full = PermGroup(pool, degree=100)
        print(f"added automorphism moving vertex 1 -> {dst + 1}, "
              f"order now {full.order}")
    assert full.order == 1209600, full.order

    rng = random.Random(61)
    dgens = []
    while True:
        x, y = full.random_element(rng), full.random_element(rng)
        dgens.append(x.inverse() * y.inverse() * x * y)
        J2 = PermGroup(dgens, degree=100)
        if J2.order == 604800:
            break
    J2 = PermGroup(gm.reduce_generators(J2, 62), degree=100)
    assert J2.order == 604800

    while True:
        x = full.random_element(rng)
        if x.order() % 3 == 0:
            t = x
            for _ in range(x.order() // 3 - 1):
                t = t * x
            t2 = t * t
            try:
                N280, _ = gm.object_stabilizer(
                    full.generators, full.generators,
                    lambda h, ob: frozenset(gm.conj_act(h, u) for u in ob),
                    frozenset({tuple(t.images), tuple(t2.images)}),
                    full.order, expect_orbit=280)
                break
            except AssertionError:
                continue
    assert N280.order == 4320

    while True:
        x = full.random_element(rng)
        if x.order() % 5 == 0:
            t = x
            for _ in range(x.order() // 5 - 1):
                t = t * x
            c = full.random_element(rng)
            y = c.inverse() * t * c
            S = PermGroup([t, y], degree=100)
            if S.order == 25:
                break
    syl_obj = frozenset(tuple(p.images) for p in S.elements())
    N2016, _ = gm.object_stabilizer(
        full.generators, full.generators,
        lambda h, ob: frozenset(gm.conj_act(h, u) for u in ob),
        syl_obj, full.order, expect_orbit=2016)
    assert N2016.order == 600

    j2_pairs = [(100, 6048), (280, 2160), (315, 1920), (525, 1152),
                (840, 720), (1008, 600), (1800, 336), (2016, 300),
                (10080, 60)]
    j2_names = ["U3(3)", "3.A6.2", "2^{1+4}:A5", "2^{2+4}:(3xS3)", "A4xA5",
                "A5xD10", "L3(2):2", "5^2:D12", "A5"]
    j2_indices = [i for i, _ in j2_pairs]
    for i, o in j2_pairs:
        case = CaseInput(group_name="J2", group_order=604800,
                         maximal_name=f"idx{i}", index=i, maximal_order=o,
                         all_indices=j2_indices)
        rec = run_case(case, PipelineOptions())
        assert not rec.surviving_candidates, (i, rec.candidates)
        if i == 280:
            assert [(c.s, c.t) for c in rec.candidates] == [(9, 3)]
            assert rec.candidates[0].cover_sizes == []
        if i == 2016:
            assert [(c.s, c.t) for c in rec.candidates] == [(13, 11)]
            assert rec.candidates[0].cover_sizes == [7]

    gm.write_bundle(
        "j2.json", name="J2", group=J2,
        provenance="derived subgroup of the full automorphism group of the "
                   "rank-3 graph on 100 vertices built from U3(3); order "
                   "604800 verified by stabilizer chain",
        maximals=[gm.maximal_entry(nm, index=i, order=o,
                                   provenance="order from standard subgroup "
                                              "structure tables; index-only "
                                              "entry")
                  for nm, (i, o) in zip(j2_names, j2_pairs)])

    j22_indices = [2, 100, 280, 315, 525, 840, 1008, 1800, 2016, 10080]
    sound = PipelineOptions(mode=SOUND)
    for i, o in [(2, 604800), (100, 12096), (315, 3840), (525, 2304),
                 (840, 1440), (1008, 1200), (1800, 672), (10080, 120)]:
        case = CaseInput(group_name="J2.2", group_order=1209600,
                         maximal_name=f"idx{i}", index=i, maximal_order=o,
                         all_indices=j22_indices)
        for opts in (PipelineOptions(), sound):
            rec = run_case(case, opts)
            assert not rec.surviving_candidates, (i, rec.candidates)

    case = CaseInput(group_name="J2.2", group_order=1209600,
                     maximal_name="3.A6.2^2", index=280, maximal_order=4320,
                     all_indices=j22_indices, group=full, maximal=N280)
    rec = run_case(case, PipelineOptions())
    assert not rec.surviving_candidates
    assert rec.candidates[0].cover_sizes == [1]
    rec = run_case(case, sound)
    c = rec.candidates[0]
    assert (c.s, c.t) == (9, 3) and c.surviving
    assert rec.subdegrees == [36, 108, 135]
    assert c.combination_count == 1
    assert not c.quadrangles
    print("J2.2 3.A6.2^2 sound-mode row:", rec.subdegrees, c.combination_count,
          [v["passed"] for v in c.srg_verdicts])

    case = CaseInput(group_name="J2.2", group_order=1209600,
                     maximal_name="5^2:(4xS3)", index=2016, maximal_order=600,
                     all_indices=j22_indices, group=full, maximal=N2016)
    rec = run_case(case, sound)
    c = rec.candidates[0]
    assert (c.s, c.t) == (13, 11) and c.surviving
    assert rec.subdegrees == [15, 25, 75, 100, 150, 150, 150, 150,
                              300, 300, 600]
    assert c.combination_count == 0
    print("J2.2 5^2:(4xS3) sound-mode subdegrees:", rec.subdegrees)

    # the index-2 subgroup refines the fused suborbits on the same cosets
    NJ2, _ = gm.object_stabilizer(
        J2.generators, J2.generators,
        lambda h, ob: frozenset(gm.conj_act(h, u) for u in ob),
        syl_obj, J2.order, expect_orbit=2016)
    assert NJ2.order == 300
    act = coset_action(J2, NJ2)
    assert act.subdegrees == [15, 25, 50, 50, 75, 75, 75, 75, 75,
                              150, 150, 150, 150, 150, 150, 300, 300]

    gm.write_bundle(
        "j22.json", name="J2.2", group=PermGroup(gm.reduce_generators(full, 63),
                                                 degree=100),
        provenance="full automorphism group of the rank-3 graph on 100 "
                   "vertices built from U3(3) (one extra vertex joined to the "
                   "36 conjugates of L2(7), unique 14- and 24-valent orbitals, "
                   "21-point subgroup orbits); order 1209600 verified by "
                   "stabilizer chain",
        maximals=[
            gm.maximal_entry("J2", group=full, sub=J2, reduce_seed=64,
                             provenance="derived subgroup, generated by "
                                        "commutators of random pairs"),
            gm.maximal_entry("U3(3).2", index=100, order=12096,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("3.A6.2^2", group=full, sub=N280, reduce_seed=65,
                             provenance="normalizer of a cyclic subgroup of "
                                        "order 3 with 560-element class, "
                                        "computed as the stabilizer of the "
                                        "generator pair under conjugation "
                                        "(orbit 280, Schreier generators)"),
            gm.maximal_entry("2^{1+4}.S5", index=315, order=3840,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("2^{2+4}:(S3xS3)", index=525, order=2304,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("(A4xA5).2", index=840, order=1440,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("(A5xD10).2", index=1008, order=1200,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("L3(2):2x2", index=1800, order=672,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
            gm.maximal_entry("5^2:(4xS3)", group=full, sub=N2016, reduce_seed=66,
                             provenance="normalizer of a Sylow 5-subgroup, "
                                        "computed as the stabilizer of the "
                                        "subgroup under conjugation (orbit "
                                        "2016, Schreier generators)"),
            gm.maximal_entry("S5", index=10080, order=120,
                             provenance="order from standard subgroup structure "
                                        "tables; index-only entry"),
        ])


if __name__ == "__main__":
    author_j2()
    print("j2 bundles done")
