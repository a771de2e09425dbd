"""Exact arithmetic filters on candidate quadrangle orders.

All functions work on arbitrary-precision integers and are pure.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt, lcm

KEEP = "keep"
ELIMINATE = "eliminate"

STRICT = "strict"
SOUND = "sound"

BOUNDED = "bounded"
UNBOUNDED = "unbounded"


@dataclass(frozen=True, order=True)
class OrderCandidate:
    """A feasible pair (s,t) of quadrangle parameters."""

    s: int
    t: int
    num_points: int = field(init=False, compare=False)
    num_lines: int = field(init=False, compare=False)

    def __post_init__(self):
        st1 = self.s * self.t + 1
        object.__setattr__(self, "num_points", (self.s + 1) * st1)
        object.__setattr__(self, "num_lines", (self.t + 1) * st1)

    def satisfies_constraints(self) -> bool:
        s, t = self.s, self.t
        return (
            s >= 2
            and t >= 2
            and s <= t * t
            and t <= s * s
            and (s * t * (s * t + 1)) % (s + t) == 0
        )


@dataclass(frozen=True)
class KnapsackSolution:
    """Counts per distinct value, aligned with the sorted distinct values."""

    values: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def total(self) -> int:
        return sum(v * m for v, m in zip(self.values, self.multiplicities))

    def parts(self) -> list[int]:
        """The solution as a flat multiset of used values."""
        out = []
        for v, m in zip(self.values, self.multiplicities):
            out.extend([v] * m)
        return out


@lru_cache(maxsize=4096)
def _factorint_items(n: int) -> tuple[tuple[int, int], ...]:
    from sympy import factorint

    return tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))


def _factorint(n: int) -> dict[int, int]:
    return dict(_factorint_items(n))


def prime_divisors(n: int) -> list[int]:
    """Ascending prime divisors of n (n ≥ 2)."""
    return sorted(_factorint(n))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in _factorint(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# Divisor-count ceilings choosing between the enumeration strategies below.
_FULL_SWEEP_CAP = 1 << 17
_WINDOW_SWEEP_CAP = 1 << 19


def _candidate_window(n: int) -> tuple[int, int]:
    """Range of j = s+1 compatible with 2 <= s,t, s <= t*t and t <= s*s.

    t <= s*s forces n <= j*((j-1)**3 + 1); s <= t*t forces
    j*((j-1)*isqrt(j-1) + 1) <= n. Both sides are monotone in j, so the
    endpoints come out of a bisection.
    """
    lo_probe = 3
    while lo_probe * ((lo_probe - 1) ** 3 + 1) < n:
        lo_probe *= 2
    a, b = max(3, lo_probe // 2), lo_probe
    while a < b:
        mid = (a + b) // 2
        if mid * ((mid - 1) ** 3 + 1) >= n:
            b = mid
        else:
            a = mid + 1
    lo = a

    hi_probe = 3
    while hi_probe * ((hi_probe - 1) * isqrt(hi_probe - 1) + 1) <= n:
        hi_probe *= 2
    a, b = hi_probe // 2, hi_probe
    while a < b:
        mid = (a + b + 1) // 2
        if mid * ((mid - 1) * isqrt(mid - 1) + 1) <= n:
            a = mid
        else:
            b = mid - 1
    return lo, a


def _split_divisor_lists(fac: dict[int, int]) -> tuple[list[int], list[int]]:
    """Divisor lists of two roughly balanced halves of a factorization."""
    half_a, half_b = [1], [1]
    for k, (p, e) in enumerate(sorted(fac.items())):
        part = half_a if k % 2 == 0 else half_b
        part[:] = [d * p**i for d in part for i in range(e + 1)]
    return half_a, half_b


def _count_divisors_in(fac: dict[int, int], lo: int, hi: int) -> int:
    """Number of divisors inside [lo, hi] without enumerating them all."""
    if lo > hi:
        return 0
    half_a, half_b = _split_divisor_lists(fac)
    half_b.sort()
    total = 0
    for d in half_a:
        if d > hi:
            continue
        left = bisect_left(half_b, -(-lo // d))
        right = bisect_right(half_b, hi // d)
        total += max(0, right - left)
    return total


def _iter_divisors_in(fac: dict[int, int], lo: int, hi: int):
    """Yield the divisors inside [lo, hi], pruning dead branches."""
    pps = [[p**i for i in range(e + 1)] for p, e in sorted(fac.items())]
    tail_max = [1] * (len(pps) + 1)
    for i in range(len(pps) - 1, -1, -1):
        tail_max[i] = tail_max[i + 1] * pps[i][-1]
    stack = [(0, 1)]
    while stack:
        i, d = stack.pop()
        if i == len(pps):
            if d >= lo:
                yield d
            continue
        if d * tail_max[i] < lo:
            continue
        for pp in pps[i]:
            nd = d * pp
            if nd > hi:
                break
            stack.append((i + 1, nd))


def _candidate_from_point_divisor(n: int, j: int) -> OrderCandidate | None:
    if j < 3 or n % j:
        return None
    q = n // j
    if (q - 1) % (j - 1):
        return None
    cand = OrderCandidate(s=j - 1, t=(q - 1) // (j - 1))
    return cand if cand.satisfies_constraints() else None


def enumerate_orders(num_points: int) -> list[OrderCandidate]:
    """All (s,t) with (s+1)(st+1) = num_points passing the divisibility tests.

    Runs over divisors j = s+1 of num_points and solves for t exactly.
    Very smooth inputs (maximal subgroup indices of the largest sporadic
    groups have ~10^8 divisors) are handled without a full divisor sweep:
    either only the divisors inside the feasible window for j are walked,
    or, when even that window is huge, s is found among the divisors of
    num_points - 1, which equals s*(t*(s+1) + 1) for any valid pair.
    """
    if num_points < 2:
        raise ValueError("num_points must be at least 2")
    n = num_points
    fac = _factorint(n)
    tau = 1
    for e in fac.values():
        tau *= e + 1

    out = []
    if tau <= _FULL_SWEEP_CAP:
        for j in divisors(n):
            cand = _candidate_from_point_divisor(n, j)
            if cand is not None:
                out.append(cand)
        return sorted(set(out))

    lo, hi = _candidate_window(n)
    if _count_divisors_in(fac, lo, hi) <= _WINDOW_SWEEP_CAP:
        for j in _iter_divisors_in(fac, lo, hi):
            cand = _candidate_from_point_divisor(n, j)
            if cand is not None:
                out.append(cand)
        return sorted(set(out))

    for s in _iter_divisors_in(_factorint(n - 1), max(2, lo - 1), hi - 1):
        cand = _candidate_from_point_divisor(n, s + 1)
        if cand is not None:
            out.append(cand)
    return sorted(set(out))


def orders_of_elements_test(group_order: int, stabiliser_order: int,
                            cand: OrderCandidate) -> str:
    """Eliminate when a large prime element order is incompatible.

    A prime q dividing the group order with q > s+1 and q > t+1 forces
    elimination when q divides the point-stabiliser order or q does not
    divide the number of lines.
    """
    if group_order % stabiliser_order != 0:
        raise ValueError("stabiliser order must divide group order")
    bound = min(cand.s, cand.t) + 1
    for q in prime_divisors(group_order):
        if q <= bound:
            continue
        if q > cand.s + 1 and q > cand.t + 1:
            if stabiliser_order % q == 0 or cand.num_lines % q != 0:
                return ELIMINATE
    return KEEP


def knapsack(values, target: int, mode: str = BOUNDED) -> list[KnapsackSolution]:
    """All ways to write target as a sum drawn from a value multiset.

    Bounded mode uses each distinct value at most as often as it occurs;
    unbounded mode reuses values freely. Solutions come out in ascending
    lexicographic order of their multiplicity vectors. A target of 0
    yields the single empty solution.
    """
    if mode not in (BOUNDED, UNBOUNDED):
        raise ValueError(f"unknown knapsack mode: {mode}")
    if target < 0:
        raise ValueError("target must be nonnegative")
    counts: dict[int, int] = {}
    for v in values:
        if v <= 0:
            raise ValueError("values must be positive")
        counts[v] = counts.get(v, 0) + 1
    distinct = tuple(sorted(counts))
    caps = [counts[v] if mode == BOUNDED else target // v for v in distinct]

    # suffix_max[i] = largest sum achievable from values i.. under the caps
    suffix_max = [0] * (len(distinct) + 1)
    for i in range(len(distinct) - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + distinct[i] * caps[i]

    solutions: list[KnapsackSolution] = []
    mults = [0] * len(distinct)

    def descend(i: int, remaining: int) -> None:
        if remaining == 0:
            solutions.append(KnapsackSolution(distinct, tuple(mults)))
            return
        if i == len(distinct) or remaining > suffix_max[i]:
            return
        v = distinct[i]
        top = min(caps[i], remaining // v)
        for m in range(top + 1):
            mults[i] = m
            descend(i + 1, remaining - m * v)
        mults[i] = 0

    descend(0, target)
    return solutions


def line_orbit_candidates(max_indices, cand: OrderCandidate) -> list[int]:
    """Multiset of feasible per-point line counts from maximal indices.

    Each index b contributes k = lcm(b, st+1)/(st+1) when lcm(b, st+1)
    does not exceed the number of lines.
    """
    k0 = cand.s * cand.t + 1
    limit = cand.num_lines
    out = []
    for b in max_indices:
        common = lcm(b, k0)
        if common <= limit:
            out.append(common // k0)
    return sorted(out)


def line_orbits_test(max_indices, cand: OrderCandidate, mode: str = STRICT,
                     primitivity_refinement: bool = False) -> str:
    """Keep iff some multiset of feasible line counts sums to t+1.

    Strict mode bounds each candidate count by how many indices produce
    it; sound mode allows unlimited reuse. The optional refinement drops
    solutions using a count equal to 1 or to t.
    """
    if not max_indices:
        raise ValueError("max_indices must be nonempty")
    if any(b < 2 for b in max_indices):
        raise ValueError("maximal subgroup indices must be at least 2")
    if mode not in (STRICT, SOUND):
        raise ValueError(f"unknown line-orbits mode: {mode}")
    ks = line_orbit_candidates(max_indices, cand)
    if not ks:
        return ELIMINATE
    knap_mode = BOUNDED if mode == STRICT else UNBOUNDED
    sols = knapsack(ks, cand.t + 1, mode=knap_mode)
    if primitivity_refinement:
        sols = [sol for sol in sols if not any(p in (1, cand.t) for p in sol.parts())]
    return KEEP if sols else ELIMINATE
