"""Orbit/stabilizer machinery and JSON emission for authoring bundled data.

Generators produced here are always re-verified (orders, indices, subgroup
membership) before being written; the shipped package never trusts this code.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from gqprim import PermGroup, Permutation

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "gqprim" / "data"


def perm_from_cycles(degree: int, cycles) -> Permutation:
    imgs = list(range(1, degree + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            imgs[a - 1] = b
    return Permutation.from_images(imgs)


def orbit_transversal(gens_perm, gens_obj, act, start):
    """BFS the orbit of start; returns {object: group element reaching it}."""
    ident = Permutation.identity(gens_perm[0].degree)
    reach = {start: ident}
    queue = [start]
    while queue:
        obj = queue.pop()
        u = reach[obj]
        for gp, go in zip(gens_perm, gens_obj):
            img = act(go, obj)
            if img not in reach:
                reach[img] = u * gp
                queue.append(img)
    return reach


def object_stabilizer(gens_perm, gens_obj, act, start, group_order,
                      expect_orbit=None):
    """Stabilizer of start via Schreier generators, stopping at the known order.

    gens_obj runs in parallel with gens_perm under act; for plain point-set
    objects pass gens_perm twice with a set-image act.
    """
    reach = orbit_transversal(gens_perm, gens_obj, act, start)
    if expect_orbit is not None and len(reach) != expect_orbit:
        raise AssertionError(f"orbit size {len(reach)}, expected {expect_orbit}")
    if group_order % len(reach):
        raise AssertionError("orbit size does not divide group order")
    target = group_order // len(reach)
    if target == 1:
        return PermGroup([Permutation.identity(gens_perm[0].degree)]), len(reach)
    sub = None
    for obj, u in reach.items():
        for gp, go in zip(gens_perm, gens_obj):
            h = u * gp * reach[act(go, obj)].inverse()
            if h.is_identity():
                continue
            if sub is None:
                sub = PermGroup([h])
            elif not sub.contains(h):
                sub = PermGroup(sub.generators + [h])
            else:
                continue
            if sub.order == target:
                return sub, len(reach)
    raise AssertionError(
        f"stabilizer order {sub.order if sub else 1} != expected {target}")


def set_act(g: Permutation, s: frozenset) -> frozenset:
    return frozenset(g.apply(x) for x in s)


def conj_act(g: Permutation, t: tuple) -> tuple:
    """Conjugation action on a permutation stored as its 1-based image tuple."""
    p = Permutation.from_images(list(t))
    return tuple((g.inverse() * p * g).images)


def subgroup_key(sub: PermGroup, limit=10**5) -> frozenset:
    return frozenset(p.key() for p in sub.elements(limit))


def reduce_generators(group: PermGroup, seed: int, tries: int = 60,
                      max_gens: int = 3) -> list[Permutation]:
    """Small random generating set with the same order; falls back to the input."""
    rng = random.Random(seed)
    for k in range(2, max_gens + 1):
        for _ in range(tries):
            cand = [group.random_element(rng) for _ in range(k)]
            if any(g.is_identity() for g in cand):
                continue
            if PermGroup(cand, degree=group.degree).order == group.order:
                return cand
    return list(group.generators)


def generate_until(make_candidate, target_order: int, degree: int,
                   seed: int, max_gens: int = 8) -> PermGroup:
    """Add random candidate generators until the group hits target_order."""
    rng = random.Random(seed)
    gens: list[Permutation] = []
    for _ in range(200):
        g = make_candidate(rng)
        if g.is_identity():
            continue
        gens.append(g)
        grp = PermGroup(gens, degree=degree)
        if grp.order == target_order:
            return grp
        if grp.order > target_order or len(gens) > max_gens:
            gens = gens[:1]
    raise AssertionError(f"failed to reach order {target_order}")


def maximal_entry(name, *, group=None, sub=None, index=None, order=None,
                  provenance="", novelty=False, reduce_seed=None):
    """Bundle maximal-subgroup entry; generator-backed when sub is given."""
    entry = {"name": name}
    if sub is not None:
        gens = sub.generators
        if reduce_seed is not None:
            gens = reduce_generators(sub, reduce_seed)
        entry["generators"] = [g.images for g in gens]
        entry["order"] = str(sub.order)
        entry["index"] = group.order // sub.order
    else:
        if order is not None:
            entry["order"] = str(order)
        if index is not None:
            entry["index"] = index
    if novelty:
        entry["novelty"] = True
    entry["provenance"] = provenance
    return entry


def write_bundle(filename, *, name, group: PermGroup, maximals,
                 provenance="", order=None):
    data = {
        "format": "gqprim/1",
        "name": name,
        "degree": group.degree,
        "order": str(order if order is not None else group.order),
        "generators": [g.images for g in group.generators],
        "provenance": provenance,
        "maximals": maximals,
    }
    path = DATA_DIR / filename
    path.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {path} ({path.stat().st_size} bytes)")
    return path


def write_index_only_bundle(filename, *, name, order, maximals, provenance=""):
    """Bundle with no generators at all: screening-only input."""
    data = {
        "format": "gqprim/1",
        "name": name,
        "degree": 1,
        "order": str(order),
        "generators": [],
        "provenance": provenance,
        "maximals": maximals,
    }
    path = DATA_DIR / filename
    path.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {path} ({path.stat().st_size} bytes)")
    return path


def write_group_file(filename, *, name, group: PermGroup, provenance=""):
    data = {
        "format": "gqprim/1",
        "name": name,
        "degree": group.degree,
        "order": str(group.order),
        "generators": [g.images for g in group.generators],
        "provenance": provenance,
    }
    path = DATA_DIR / filename
    path.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {path} ({path.stat().st_size} bytes)")
    return path
