"""Orbital collinearity graphs and strong-regularity checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RejectedCombinationError
from .permgroup import CosetActionData

MATRIX_VERTEX_LIMIT = 1 << 16


@dataclass(frozen=True)
class SrgParameters:
    v: int
    k: int
    lmbda: int
    mu: int

    def identity_holds(self) -> bool:
        """Edge-count identity k(k-λ-1) = (v-k-1)μ."""
        return self.k * (self.k - self.lmbda - 1) == (self.v - self.k - 1) * self.mu

    @classmethod
    def from_candidate(cls, cand) -> "SrgParameters":
        st1 = cand.s * cand.t + 1
        return cls(v=(cand.s + 1) * st1, k=cand.s * (cand.t + 1),
                   lmbda=cand.s - 1, mu=cand.t + 1)


@dataclass(frozen=True)
class SrgCheckResult:
    passed: bool
    reason: str | None
    expected: SrgParameters

    def __bool__(self) -> bool:
        return self.passed


class CollinearityGraph:
    """Undirected loopless graph on 1-based vertices.

    Dense bool matrix up to MATRIX_VERTEX_LIMIT vertices, sorted
    adjacency arrays beyond.
    """

    def __init__(self, vertex_count: int, edges: np.ndarray, source=None,
                 force_lists: bool = False):
        # edges: array of 0-based (u, v) pairs, loops forbidden
        self.vertex_count = vertex_count
        self.source = source
        self._matrix = None
        self._adj = None
        if edges.size and int(edges.min()) < 0 or edges.size and int(edges.max()) >= vertex_count:
            raise ValueError("edge endpoint out of range")
        if edges.size and (edges[:, 0] == edges[:, 1]).any():
            raise ValueError("loops are not allowed")
        if vertex_count <= MATRIX_VERTEX_LIMIT and not force_lists:
            m = np.zeros((vertex_count, vertex_count), dtype=bool)
            if edges.size:
                m[edges[:, 0], edges[:, 1]] = True
                m[edges[:, 1], edges[:, 0]] = True
            self._matrix = m
        else:
            adj: list[set[int]] = [set() for _ in range(vertex_count)]
            for u, v in edges:
                adj[int(u)].add(int(v))
                adj[int(v)].add(int(u))
            self._adj = [np.array(sorted(s), dtype=np.int64) for s in adj]

    @property
    def is_matrix_backed(self) -> bool:
        return self._matrix is not None

    def matrix(self) -> np.ndarray:
        """Dense bool adjacency; only for matrix-backed graphs."""
        if self._matrix is None:
            raise ValueError("graph is stored as adjacency lists")
        return self._matrix

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted 1-based neighbors of a 1-based vertex."""
        if self._matrix is not None:
            return np.nonzero(self._matrix[v - 1])[0] + 1
        return self._adj[v - 1] + 1

    def degree(self, v: int) -> int:
        if self._matrix is not None:
            return int(self._matrix[v - 1].sum())
        return int(self._adj[v - 1].size)

    def degrees(self) -> np.ndarray:
        if self._matrix is not None:
            return self._matrix.sum(axis=1)
        return np.array([a.size for a in self._adj], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        if self._matrix is not None:
            return bool(self._matrix[u - 1, v - 1])
        a = self._adj[u - 1]
        i = int(np.searchsorted(a, v - 1))
        return i < a.size and int(a[i]) == v - 1

    def common_neighbor_count(self, u: int, v: int) -> int:
        if self._matrix is not None:
            return int(np.count_nonzero(self._matrix[u - 1] & self._matrix[v - 1]))
        return int(np.intersect1d(self._adj[u - 1], self._adj[v - 1],
                                  assume_unique=True).size)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def edges(self):
        """Yield 1-based (u, v) with u < v, lexicographically sorted."""
        if self._matrix is not None:
            iu, iv = np.nonzero(np.triu(self._matrix, k=1))
            for u, v in zip(iu.tolist(), iv.tolist()):
                yield (u + 1, v + 1)
        else:
            for u, a in enumerate(self._adj):
                for v in a[a > u].tolist():
                    yield (u + 1, v + 1)


def edge_list_lines(g: CollinearityGraph) -> list[str]:
    """Plain-text export: one "u v" per line, 1-based, sorted."""
    return [f"{u} {v}" for u, v in g.edges()]


def build_orbital_graph(action: CosetActionData, neighborhood,
                        source=None, force_lists: bool = False) -> CollinearityGraph:
    """Graph whose base-vertex neighborhood is the given suborbit union.

    The edge set is the orbit of the base arcs under the group's label
    permutations, so adjacency does not depend on which element maps a
    vertex to the base coset. The suborbit id set must be closed under
    arc-reversal pairing.
    """
    ids = sorted(set(neighborhood))
    for i in ids:
        if not 0 <= i < len(action.suborbits):
            raise ValueError(f"no suborbit with id {i}")
    paired = {action.pairings[i] for i in ids}
    if paired != set(ids):
        raise RejectedCombinationError(
            f"suborbit ids {ids} are not closed under pairing (paired ids {sorted(paired)})"
        )

    n = action.degree
    arrs = action.generator_label_arrays()
    base_neighbors = np.array(
        sorted(x - 1 for i in ids for x in action.suborbits[i]), dtype=np.int64
    )

    if n <= MATRIX_VERTEX_LIMIT and not force_lists:
        adj = np.zeros((n, n), dtype=bool)
        frontier = np.column_stack(
            [np.zeros(base_neighbors.size, dtype=np.int64), base_neighbors]
        )
        adj[frontier[:, 0], frontier[:, 1]] = True
        adj[frontier[:, 1], frontier[:, 0]] = True
        while frontier.size:
            nxt = []
            for arr in arrs:
                mapped = arr[frontier]
                new = ~adj[mapped[:, 0], mapped[:, 1]]
                if new.any():
                    fresh = mapped[new]
                    adj[fresh[:, 0], fresh[:, 1]] = True
                    adj[fresh[:, 1], fresh[:, 0]] = True
                    nxt.append(fresh)
            frontier = np.concatenate(nxt) if nxt else np.empty((0, 2), dtype=np.int64)
        g = CollinearityGraph.__new__(CollinearityGraph)
        g.vertex_count = n
        g.source = source
        g._matrix = adj
        g._adj = None
        return g

    seen: set[tuple[int, int]] = set()
    frontier_list: list[tuple[int, int]] = []
    for y in base_neighbors.tolist():
        for arc in ((0, y), (y, 0)):
            if arc not in seen:
                seen.add(arc)
                frontier_list.append(arc)
    qi = 0
    while qi < len(frontier_list):
        u, v = frontier_list[qi]
        qi += 1
        for arr in arrs:
            arc = (int(arr[u]), int(arr[v]))
            if arc not in seen:
                seen.add(arc)
                frontier_list.append(arc)
    edges = np.array(sorted({(min(u, v), max(u, v)) for u, v in seen}), dtype=np.int64)
    return CollinearityGraph(n, edges, source=source, force_lists=force_lists)


def check_srg(g: CollinearityGraph, cand) -> SrgCheckResult:
    """Verify strong regularity against the candidate's parameters.

    Checks vertex count, then degrees, then common-neighbor counts for
    every vertex pair in row-major order; the first violated count is
    reported. Passing is equivalent to the graph being connected of
    diameter 2 with the prescribed intersection numbers, since mu > 0.
    """
    exp = SrgParameters.from_candidate(cand)

    def fail(reason):
        return SrgCheckResult(False, reason, exp)

    if g.vertex_count != exp.v:
        return fail(f"vertex count {g.vertex_count}, expected {exp.v}")

    degs = g.degrees()
    bad = np.nonzero(degs != exp.k)[0]
    if bad.size:
        u = int(bad[0])
        return fail(f"degree({u + 1}) = {int(degs[u])}, expected {exp.k}")

    if g.is_matrix_backed:
        a = g.matrix()
        af = a.astype(np.float32)
        n = g.vertex_count
        # small row blocks: a vertex-transitive violation shows in block one
        chunk = max(1, (1 << 19) // max(n, 1))
        for start in range(0, n, chunk):
            stop = min(n, start + chunk)
            counts = (af[start:stop] @ af).astype(np.int64)
            block = a[start:stop]
            viol = np.where(block, counts != exp.lmbda, counts != exp.mu)
            viol[:, start:stop] &= ~np.eye(stop - start, dtype=bool)
            if viol.any():
                ri, ci = np.nonzero(viol)
                u, w = int(ri[0]) + start, int(ci[0])
                c = int(counts[int(ri[0]), w])
                if a[u, w]:
                    return fail(f"lambda({u + 1},{w + 1}) = {c}, expected {exp.lmbda}")
                return fail(f"mu({u + 1},{w + 1}) = {c}, expected {exp.mu}")
        return SrgCheckResult(True, None, exp)

    for u in range(1, g.vertex_count + 1):
        nbrs = set(g.neighbors(u).tolist())
        for w in range(1, g.vertex_count + 1):
            if w == u:
                continue
            c = g.common_neighbor_count(u, w)
            if w in nbrs:
                if c != exp.lmbda:
                    return fail(f"lambda({u},{w}) = {c}, expected {exp.lmbda}")
            elif c != exp.mu:
                return fail(f"mu({u},{w}) = {c}, expected {exp.mu}")
    return SrgCheckResult(True, None, exp)
