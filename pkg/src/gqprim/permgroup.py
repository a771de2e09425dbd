"""Permutation groups on {1..n}: stabilizer chains, coset actions, suborbits."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedInputError, NotASubgroupError, ResourceLimitError

DEFAULT_DEGREE_CAP = 1 << 22


class Permutation:
    """A permutation of {1..degree} stored as a 0-based numpy image array."""

    __slots__ = ("imgs",)

    def __init__(self, imgs: np.ndarray):
        self.imgs = imgs

    @classmethod
    def from_images(cls, images) -> "Permutation":
        """Build from a 1-based image list; rejects non-bijections."""
        arr = np.asarray(images, dtype=np.int64)
        n = arr.shape[0]
        if n == 0:
            raise MalformedInputError("empty image list")
        arr = arr - 1
        if arr.min() < 0 or arr.max() >= n or np.unique(arr).size != n:
            raise MalformedInputError(f"images are not a bijection of 1..{n}")
        return cls(arr.astype(np.int32))

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(np.arange(degree, dtype=np.int32))

    @property
    def degree(self) -> int:
        return int(self.imgs.shape[0])

    @property
    def images(self) -> list[int]:
        """1-based image list, inverse of from_images."""
        return [int(x) + 1 for x in self.imgs]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # right action: (p * q) sends x to q(p(x))
        return Permutation(other.imgs[self.imgs])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.imgs)
        inv[self.imgs] = np.arange(self.degree, dtype=np.int32)
        return Permutation(inv)

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        return int(self.imgs[point - 1]) + 1

    def is_identity(self) -> bool:
        return bool((self.imgs == np.arange(self.degree, dtype=np.int32)).all())

    def order(self) -> int:
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def key(self) -> bytes:
        return self.imgs.tobytes()

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and np.array_equal(self.imgs, other.imgs)

    def __hash__(self) -> int:
        return hash(self.imgs.tobytes())

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles on 1-based points, each starting at its minimum."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start] or self.imgs[start] == start:
                seen[start] = True
                continue
            cyc = [start]
            seen[start] = True
            x = int(self.imgs[start])
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = int(self.imgs[x])
            out.append(tuple(p + 1 for p in cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(identity, degree={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation({body})"


class _Level:
    """One stabilizer-chain level: base point, generators, transversal."""

    __slots__ = ("bpt", "gens", "tr", "tr_inv")

    def __init__(self, bpt: int):
        self.bpt = bpt
        self.gens: list[Permutation] = []
        self.tr: dict[int, Permutation] = {}
        self.tr_inv: dict[int, Permutation] = {}


def _first_moved(g: Permutation) -> int:
    diff = np.nonzero(g.imgs != np.arange(g.degree, dtype=np.int32))[0]
    return int(diff[0])


class PermGroup:
    """Group generated by permutations, with a verified stabilizer chain."""

    def __init__(self, generators: list[Permutation], degree: int | None = None):
        if degree is None:
            if not generators:
                raise MalformedInputError("degree required for an empty generating set")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise MalformedInputError("generators have mixed degrees")
        self.degree = degree
        self.generators = list(generators)
        self._levels: list[_Level] = []
        self._build_chain()
        self._verify_chain()

    # chain construction: deterministic Schreier-Sims

    def _recompute_orbit(self, i: int) -> None:
        lvl = self._levels[i]
        e = Permutation.identity(self.degree)
        lvl.tr = {lvl.bpt: e}
        lvl.tr_inv = {lvl.bpt: e}
        queue = [lvl.bpt]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            ux = lvl.tr[x]
            for s in lvl.gens:
                y = int(s.imgs[x])
                if y not in lvl.tr:
                    u = ux * s
                    lvl.tr[y] = u
                    lvl.tr_inv[y] = u.inverse()
                    queue.append(y)

    def _strip(self, g: Permutation, start: int) -> tuple[Permutation, int]:
        i = start
        while i < len(self._levels):
            lvl = self._levels[i]
            p = int(g.imgs[lvl.bpt])
            u_inv = lvl.tr_inv.get(p)
            if u_inv is None:
                return g, i
            g = g * u_inv
            i += 1
        return g, i

    def _new_level(self, bpt: int) -> None:
        self._levels.append(_Level(bpt))

    def _close_level(self, i: int) -> None:
        # verify Schreier generators at level i, fixing deeper levels as needed
        self._recompute_orbit(i)
        lvl = self._levels[i]
        pts = sorted(lvl.tr)
        for x in pts:
            ux = lvl.tr[x]
            for s in list(lvl.gens):
                y = int(s.imgs[x])
                sg = ux * s * lvl.tr_inv[y]
                if sg.is_identity():
                    continue
                h, j = self._strip(sg, i + 1)
                if h.is_identity():
                    continue
                if j == len(self._levels):
                    self._new_level(_first_moved(h))
                for l in range(i + 1, j + 1):
                    self._levels[l].gens.append(h)
                for l in range(j, i, -1):
                    self._close_level(l)

    def _build_chain(self) -> None:
        gens = [g for g in self.generators if not g.is_identity()]
        for g in gens:
            j = 0
            while j < len(self._levels) and int(g.imgs[self._levels[j].bpt]) == self._levels[j].bpt:
                j += 1
            if j == len(self._levels):
                self._new_level(_first_moved(g))
            for l in range(j + 1):
                self._levels[l].gens.append(g)
        for i in range(len(self._levels) - 1, -1, -1):
            self._close_level(i)

    def _verify_chain(self) -> None:
        for g in self.generators:
            h, _ = self._strip(g, 0)
            if not h.is_identity():
                raise AssertionError("stabilizer chain failed to absorb a generator")
        for i, lvl in enumerate(self._levels):
            for x in lvl.tr:
                for s in lvl.gens:
                    sg = lvl.tr[x] * s * lvl.tr_inv[int(s.imgs[x])]
                    h, _ = self._strip(sg, i + 1)
                    if not h.is_identity():
                        raise AssertionError("stabilizer chain is not closed")

    # queries

    @property
    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.tr)
        return n

    def base(self) -> list[int]:
        """1-based base points of the chain."""
        return [lvl.bpt + 1 for lvl in self._levels]

    def sift(self, g: Permutation) -> Permutation:
        """Residue of g against the chain; identity iff g is a member."""
        if g.degree != self.degree:
            raise MalformedInputError("degree mismatch in membership test")
        h, _ = self._strip(g, 0)
        return h

    def contains(self, g: Permutation) -> bool:
        return self.sift(g).is_identity()

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def random_element(self, rng: random.Random) -> Permutation:
        """Product of a random word in the generators, length 10..30."""
        if not self.generators:
            return self.identity()
        g = self.identity()
        for _ in range(rng.randrange(10, 31)):
            g = g * rng.choice(self.generators)
        return g

    def verify_random_words(self, seed: int, count: int = 100) -> None:
        """Membership check on seeded random generator words; raises on failure."""
        rng = random.Random(seed)
        for _ in range(count):
            if not self.contains(self.random_element(rng)):
                raise AssertionError("random word escaped the stabilizer chain")

    def elements(self, limit: int = 10**6):
        """Yield all elements (BFS closure); guarded by an explicit cap."""
        if self.order > limit:
            raise ResourceLimitError(f"refusing to enumerate {self.order} elements")
        e = self.identity()
        seen = {e.key(): e}
        queue = [e]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for g in self.generators:
                y = x * g
                k = y.key()
                if k not in seen:
                    seen[k] = y
                    queue.append(y)
        return list(seen.values())

    def orbit(self, point: int) -> set[int]:
        """Orbit of a 1-based point under the group."""
        p0 = point - 1
        seen = {p0}
        queue = [p0]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for g in self.generators:
                y = int(g.imgs[x])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return {x + 1 for x in seen}

    def stabilizer(self, point: int) -> "PermGroup":
        """Point stabilizer via Schreier generators on the point's orbit."""
        p0 = point - 1
        e = Permutation.identity(self.degree)
        tr = {p0: e}
        queue = [p0]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            for g in self.generators:
                y = int(g.imgs[x])
                if y not in tr:
                    tr[y] = tr[x] * g
                    queue.append(y)
        sub = PermGroup([], degree=self.degree)
        seen_keys = {e.key()}
        gens: list[Permutation] = []
        for x in sorted(tr):
            ux = tr[x]
            for g in self.generators:
                y = int(g.imgs[x])
                sg = ux * g * tr[y].inverse()
                k = sg.key()
                if k in seen_keys:
                    continue
                seen_keys.add(k)
                if not sub.contains(sg):
                    gens.append(sg)
                    sub = PermGroup(gens, degree=self.degree)
        return sub

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"


def build_group(generators, degree: int | None = None) -> PermGroup:
    """Build a group from 1-based image lists or Permutation objects."""
    perms = [g if isinstance(g, Permutation) else Permutation.from_images(g) for g in generators]
    return PermGroup(perms, degree=degree)


def require_subgroup(group: PermGroup, sub: PermGroup) -> None:
    """Raise NotASubgroupError unless every generator of sub sifts into group."""
    if sub.degree != group.degree:
        raise NotASubgroupError("subgroup degree differs from ambient group degree")
    for i, g in enumerate(sub.generators):
        if not group.contains(g):
            raise NotASubgroupError(f"subgroup generator {i + 1} is not in the ambient group")


def subgroup_index(group: PermGroup, sub: PermGroup) -> int:
    """Index [group : sub]; verifies membership of sub's generators first."""
    require_subgroup(group, sub)
    if group.order % sub.order != 0:
        raise AssertionError("subgroup order does not divide group order")
    return group.order // sub.order


@dataclass
class CosetActionData:
    """Transitive action of a group on the right cosets of a subgroup.

    Labels are 1-based; label 1 is the coset of the subgroup itself.
    generator_images[i][x-1] is the 1-based image of label x under the
    i-th group generator (file order). pairings[k] is the 0-based index
    of the suborbit paired with suborbits[k] under arc reversal.
    """

    degree: int
    generator_images: list[np.ndarray]
    base_coset: int
    suborbits: list[list[int]]
    subdegrees: list[int]
    pairings: list[int]
    stabilizer_images: list[np.ndarray] = field(repr=False, default_factory=list)

    def generator_label_arrays(self) -> list[np.ndarray]:
        """0-based label permutation arrays, one per group generator."""
        return [img - 1 for img in self.generator_images]

    def suborbit_of(self, label: int) -> int:
        """Index (0-based) of the suborbit containing a non-base label."""
        for i, orb in enumerate(self.suborbits):
            if label in self._suborbit_sets[i]:
                return i
        raise ValueError(f"label {label} is not in any suborbit")

    def __post_init__(self):
        self._suborbit_sets = [set(o) for o in self.suborbits]


def _coset_canonicalizer(sub: PermGroup):
    """Return f(g) -> canonical element of the right coset (sub)g.

    Minimizes the image tuple of sub's base points greedily down the chain:
    the result is the unique coset element minimizing that tuple, so two
    elements canonicalize equal iff they lie in the same right coset.
    """
    levels = [(lvl, np.fromiter(lvl.tr, dtype=np.int64, count=len(lvl.tr)))
              for lvl in sub._levels]

    def canon(g: Permutation) -> Permutation:
        rep = g
        for lvl, orbit_arr in levels:
            vals = rep.imgs[orbit_arr]
            best_o = int(orbit_arr[int(np.argmin(vals))])
            if best_o != lvl.bpt:
                rep = lvl.tr[best_o] * rep
        return rep

    return canon


def coset_action(group: PermGroup, sub: PermGroup,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> CosetActionData:
    """Action of group on right cosets of sub, with stabilizer suborbits.

    Labels are assigned by breadth-first search from the base coset using
    the group generators in their given order, so the labelling is
    deterministic for a fixed input.
    """
    require_subgroup(group, sub)
    index = subgroup_index(group, sub)
    if index > degree_cap:
        raise ResourceLimitError(f"coset action degree {index} exceeds cap {degree_cap}")

    canon = _coset_canonicalizer(sub)
    r0 = canon(group.identity())
    labels: dict[bytes, int] = {r0.key(): 0}
    reps: list[Permutation] = [r0]
    gen_images = [np.zeros(index, dtype=np.int32) for _ in group.generators]

    qi = 0
    while qi < len(reps):
        r = reps[qi]
        for gi, g in enumerate(group.generators):
            c = canon(r * g)
            k = c.key()
            lbl = labels.get(k)
            if lbl is None:
                lbl = len(reps)
                if lbl >= index:
                    raise AssertionError("coset enumeration exceeded the subgroup index")
                labels[k] = lbl
                reps.append(c)
            gen_images[gi][qi] = lbl
        qi += 1
    if len(reps) != index:
        raise AssertionError("coset enumeration found fewer cosets than the index")

    stab_images = []
    for m in sub.generators:
        arr = np.zeros(index, dtype=np.int32)
        for lbl, r in enumerate(reps):
            arr[lbl] = labels[canon(r * m).key()]
        stab_images.append(arr)

    suborbits = _label_orbits(index, stab_images, skip_base=True)
    subdegrees = sorted(len(o) for o in suborbits)

    suborbit_index = np.full(index, -1, dtype=np.int64)
    for k, orb in enumerate(suborbits):
        for x in orb:
            suborbit_index[x] = k
    pairings = []
    for orb in suborbits:
        y = orb[0]
        z = labels[canon(reps[y].inverse()).key()]
        pairings.append(int(suborbit_index[z]))

    return CosetActionData(
        degree=index,
        generator_images=[arr + 1 for arr in gen_images],
        base_coset=1,
        suborbits=[[x + 1 for x in orb] for orb in suborbits],
        subdegrees=subdegrees,
        pairings=pairings,
        stabilizer_images=[arr + 1 for arr in stab_images],
    )


def _label_orbits(n: int, images: list[np.ndarray], skip_base: bool) -> list[list[int]]:
    """Orbits of 0-based labels under image arrays, ordered by minimum label."""
    start = 1 if skip_base else 0
    seen = np.zeros(n, dtype=bool)
    if skip_base:
        seen[0] = True
    orbits = []
    for x0 in range(start, n):
        if seen[x0]:
            continue
        comp = [x0]
        seen[x0] = True
        qi = 0
        while qi < len(comp):
            x = comp[qi]
            qi += 1
            for arr in images:
                y = int(arr[x])
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
        orbits.append(sorted(comp))
    return orbits


def orbital_pairing(action: CosetActionData, suborbit_index: int) -> int:
    """Index of the suborbit paired with the given one under arc reversal.

    The suborbit of label y pairs with the suborbit holding the image of
    the base label under the inverse of any element mapping base to y.
    """
    if not 0 <= suborbit_index < len(action.suborbits):
        raise ValueError(f"no suborbit with index {suborbit_index}")
    return action.pairings[suborbit_index]
