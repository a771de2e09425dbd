"""Generalised quadrangles: extraction from graphs, axioms, line-orbits."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedInputError, NotAnAutomorphismError
from .graphs import CollinearityGraph, check_srg
from .permgroup import PermGroup

LINE_TRANSITIVE = "line-transitive"
HEMISYSTEM = "hemisystem"
OTHER = "other"


@dataclass(frozen=True)
class PseudoGeometric:
    """Marker result: the graph has the right parameters but no quadrangle."""

    reason: str


@dataclass(frozen=True)
class QuadrangleData:
    """A generalised quadrangle of order (s,t) as a sorted line list."""

    point_count: int
    s: int
    t: int
    lines: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @classmethod
    def from_lines(cls, point_count, s, t, lines, name="") -> "QuadrangleData":
        canon = tuple(sorted(tuple(sorted(int(p) for p in line)) for line in lines))
        return cls(point_count, s, t, canon, name)

    @property
    def line_count(self) -> int:
        return len(self.lines)

    def first_axiom_failure(self) -> str | None:
        """Name of the first violated axiom, or None when all hold."""
        s, t, n = self.s, self.t, self.point_count
        st1 = s * t + 1
        if s < 2 or t < 2:
            return f"thickness: order ({s},{t}) needs s,t >= 2"
        if n != (s + 1) * st1:
            return f"point count {n}, expected {(s + 1) * st1}"
        if len(self.lines) != (t + 1) * st1:
            return f"line count {len(self.lines)}, expected {(t + 1) * st1}"
        if len(set(self.lines)) != len(self.lines):
            return "duplicate lines"
        per_point = np.zeros(n, dtype=np.int64)
        for idx, line in enumerate(self.lines):
            if len(line) != s + 1 or len(set(line)) != s + 1:
                return f"line {idx + 1} has {len(line)} points, expected {s + 1}"
            if line[0] < 1 or line[-1] > n:
                return f"line {idx + 1} uses a point outside 1..{n}"
            for p in line:
                per_point[p - 1] += 1
        bad = np.nonzero(per_point != t + 1)[0]
        if bad.size:
            p = int(bad[0])
            return f"point {p + 1} lies on {int(per_point[p])} lines, expected {t + 1}"
        seen_pairs = set()
        for idx, line in enumerate(self.lines):
            for i in range(len(line)):
                for j in range(i + 1, len(line)):
                    pair = (line[i], line[j])
                    if pair in seen_pairs:
                        return f"points {pair[0]},{pair[1]} lie on two lines"
                    seen_pairs.add(pair)
        coll = self.collinearity_matrix()
        for idx, line in enumerate(self.lines):
            pts = np.array(line, dtype=np.int64) - 1
            on_line = np.zeros(n, dtype=bool)
            on_line[pts] = True
            counts = coll[:, pts].sum(axis=1)
            outside = ~on_line
            bad = np.nonzero(outside & (counts != 1))[0]
            if bad.size:
                p = int(bad[0]) + 1
                return (
                    f"point {p} sees {int(counts[bad[0]])} points of line {idx + 1}, expected 1"
                )
        return None

    def verify(self) -> "QuadrangleData":
        """Raise MalformedInputError on the first violated axiom."""
        failure = self.first_axiom_failure()
        if failure is not None:
            raise MalformedInputError(f"not a generalised quadrangle: {failure}")
        return self

    def collinearity_matrix(self) -> np.ndarray:
        """Symmetric bool matrix; diagonal is False."""
        n = self.point_count
        coll = np.zeros((n, n), dtype=bool)
        for line in self.lines:
            pts = np.array(line, dtype=np.int64) - 1
            coll[np.ix_(pts, pts)] = True
        np.fill_diagonal(coll, False)
        return coll

    def collinearity_graph(self) -> CollinearityGraph:
        iu, iv = np.nonzero(np.triu(self.collinearity_matrix(), k=1))
        edges = np.column_stack([iu, iv])
        return CollinearityGraph(self.point_count, edges, source=("gq", self.name))

    def lines_through(self, point: int) -> list[int]:
        """0-based indices of lines through a 1-based point."""
        return [i for i, line in enumerate(self.lines) if point in line]

    def dual(self) -> "QuadrangleData":
        """Interchange points and lines; a GQ of order (t,s)."""
        new_lines = []
        for p in range(1, self.point_count + 1):
            new_lines.append(tuple(i + 1 for i in self.lines_through(p)))
        return QuadrangleData.from_lines(
            point_count=self.line_count,
            s=self.t,
            t=self.s,
            lines=new_lines,
            name=f"{self.name} dual" if self.name else "",
        )


def extract_gq(g: CollinearityGraph, cand,
               srg_checked: bool = False) -> QuadrangleData | PseudoGeometric:
    """Recover the unique quadrangle with collinearity graph g, if any.

    Every line must be the common neighborhood of any two of its points,
    so candidate lines are read off the edges; failure at any stage means
    the graph is merely pseudo-geometric.
    """
    if not srg_checked:
        srg = check_srg(g, cand)
        if not srg.passed:
            raise MalformedInputError(f"extract_gq needs a strongly regular input: {srg.reason}")
    s, t = cand.s, cand.t
    if not g.is_matrix_backed:
        raise MalformedInputError("quadrangle extraction needs a matrix-backed graph")
    a = g.matrix()
    lines = set()
    for u, v in g.edges():
        common = np.nonzero(a[u - 1] & a[v - 1])[0] + 1
        line = tuple(sorted([u, v] + common.tolist()))
        if len(line) != s + 1:
            return PseudoGeometric(
                f"edge {u},{v} closes to {len(line)} points, expected {s + 1}"
            )
        lines.add(line)
    for line in lines:
        pts = np.array(line, dtype=np.int64) - 1
        sub = a[np.ix_(pts, pts)]
        if not (sub | np.eye(len(pts), dtype=bool)).all():
            return PseudoGeometric(f"candidate line {line} is not a clique")
    gq = QuadrangleData.from_lines(g.vertex_count, s, t, lines)
    failure = gq.first_axiom_failure()
    if failure is not None:
        return PseudoGeometric(failure)
    return gq


@dataclass(frozen=True)
class LineOrbitReport:
    """Line-orbit structure of a group acting on a quadrangle."""

    orbit_sizes: tuple[int, ...]
    k_values: tuple[int | None, ...]
    classification: str
    orbits: tuple[tuple[int, ...], ...] = field(compare=False, default=())


def line_orbits(gq: QuadrangleData, group: PermGroup) -> LineOrbitReport:
    """Orbits of the group on lines, with per-orbit cover counts.

    Each generator must permute the line set; line images are computed
    from point images.
    """
    if group.degree != gq.point_count:
        raise MalformedInputError(
            f"group degree {group.degree} differs from point count {gq.point_count}"
        )
    index_of = {line: i for i, line in enumerate(gq.lines)}
    nlines = len(gq.lines)
    gen_maps = []
    for gi, gen in enumerate(group.generators):
        arr = np.zeros(nlines, dtype=np.int64)
        for i, line in enumerate(gq.lines):
            image = tuple(sorted(gen.apply(p) for p in line))
            j = index_of.get(image)
            if j is None:
                raise NotAnAutomorphismError(
                    f"generator {gi + 1} maps line {i + 1} outside the line set"
                )
            arr[i] = j
        gen_maps.append(arr)

    seen = np.zeros(nlines, dtype=bool)
    orbits = []
    for start in range(nlines):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        qi = 0
        while qi < len(comp):
            x = comp[qi]
            qi += 1
            for arr in gen_maps:
                y = int(arr[x])
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
        orbits.append(tuple(sorted(comp)))

    st1 = gq.s * gq.t + 1
    for orb in orbits:
        if len(orb) % st1 != 0:
            raise AssertionError(
                f"line-orbit size {len(orb)} is not a multiple of {st1}"
            )

    order = sorted(range(len(orbits)), key=lambda i: (len(orbits[i]), orbits[i]))
    orbits = tuple(orbits[i] for i in order)
    sizes = tuple(len(o) for o in orbits)
    ks = tuple(verify_cover(gq, orb) for orb in orbits)

    nlines_half = gq.line_count // 2
    if len(orbits) == 1:
        cls = LINE_TRANSITIVE
    elif (
        len(orbits) == 2
        and gq.line_count % 2 == 0
        and sizes == (nlines_half, nlines_half)
        and (gq.t + 1) % 2 == 0
        and ks == ((gq.t + 1) // 2, (gq.t + 1) // 2)
    ):
        cls = HEMISYSTEM
    else:
        cls = OTHER
    return LineOrbitReport(sizes, ks, cls, orbits)


def verify_cover(gq: QuadrangleData, line_subset) -> int | None:
    """k when every point meets exactly k of the given lines, else None.

    Accepts 0-based line indices or explicit lines from gq.lines.
    """
    ids = []
    for item in line_subset:
        if isinstance(item, (int, np.integer)):
            if not 0 <= int(item) < gq.line_count:
                raise MalformedInputError(f"no line with index {item}")
            ids.append(int(item))
        else:
            line = tuple(sorted(int(p) for p in item))
            try:
                ids.append(gq.lines.index(line))
            except ValueError:
                raise MalformedInputError(f"{line} is not a line of the quadrangle")
    per_point = np.zeros(gq.point_count, dtype=np.int64)
    for i in ids:
        for p in gq.lines[i]:
            per_point[p - 1] += 1
    k = int(per_point[0])
    if (per_point == k).all():
        return k
    return None


# classical quadrangle naming

def _is_prime_power(n: int) -> bool:
    from sympy import factorint

    return len(factorint(n)) == 1


def _regular_pair_count(gq: QuadrangleData, coll: np.ndarray, p: int, q: int) -> int:
    """Size of the double perp of two non-collinear points p, q (1-based)."""
    closed = coll.copy()
    np.fill_diagonal(closed, True)
    perp = np.nonzero(closed[p - 1] & closed[q - 1])[0]
    span = np.ones(gq.point_count, dtype=bool)
    for x in perp:
        span &= closed[x]
    return int(np.count_nonzero(span))


def classify_quadrangle(gq: QuadrangleData) -> str:
    """Best-effort classical name for small orders, else a generic label.

    For s = t = q the symplectic quadrangle is separated from the
    parabolic one by regularity of point pairs: all double perps of
    non-collinear pairs have size t+1 in the symplectic case and size 2
    in its dual for odd q.
    """
    s, t = gq.s, gq.t
    fixed = {
        (2, 2): "W(3,2)",
        (2, 4): "Q-(5,2)",
        (4, 2): "H(3,4)",
        (3, 9): "Q-(5,3)",
        (9, 3): "H(3,9)",
        (4, 8): "H(4,4)",
        (8, 4): "H(4,4) dual",
    }
    if (s, t) in fixed:
        return fixed[(s, t)]
    if s == t and s > 2 and _is_prime_power(s):
        coll = gq.collinearity_matrix()
        p = 1
        non_coll = np.nonzero(~coll[0])[0] + 1
        non_coll = [int(x) for x in non_coll if int(x) != p]
        if non_coll:
            size = _regular_pair_count(gq, coll, p, non_coll[0])
            if size == t + 1:
                return f"W(3,{s})"
            if size == 2:
                return f"Q(4,{s})"
    return f"GQ({s},{t})"
