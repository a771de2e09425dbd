"""Per-case orchestration from arithmetic screening to quadrangle extraction."""

from __future__ import annotations

import itertools
import logging
import os
import time
from dataclasses import dataclass, field

from .arith import (
    BOUNDED,
    ELIMINATE,
    KEEP,
    SOUND,
    STRICT,
    OrderCandidate,
    enumerate_orders,
    knapsack,
    line_orbit_candidates,
    line_orbits_test,
    orders_of_elements_test,
)
from .errors import (
    MalformedInputError,
    RejectedCombinationError,
    ResourceLimitError,
    StageTimeoutError,
)
from .gq import PseudoGeometric, classify_quadrangle, extract_gq
from .graphs import build_orbital_graph, check_srg, edge_list_lines
from .permgroup import DEFAULT_DEGREE_CAP, CosetActionData, PermGroup, coset_action

log = logging.getLogger("gqprim")

DEFAULT_SEED = 9201
DEFAULT_STAGE_TIMEOUT = 600.0

RESOLVED = "resolved"
UNRESOLVED = "unresolved-by-machine"


@dataclass
class PipelineOptions:
    """Run configuration shared by the CLI and library entry points."""

    mode: str = STRICT
    refine_k: bool = False
    degree_cap: int = DEFAULT_DEGREE_CAP
    stage_timeout: float = DEFAULT_STAGE_TIMEOUT
    seed: int = DEFAULT_SEED
    emit_graphs: str | None = None
    emit_gq: str | None = None


@dataclass
class CaseInput:
    """One (group, maximal class) unit of work, already validated."""

    group_name: str
    group_order: int
    maximal_name: str
    index: int
    maximal_order: int
    all_indices: list[int]
    group: PermGroup | None = None
    maximal: PermGroup | None = None
    novelty: bool | None = None
    ordinal: int = 0

    @property
    def index_only(self) -> bool:
        return self.group is None or self.maximal is None


@dataclass
class CandidateRecord:
    """Verdict trail for a single (s,t) candidate of one case."""

    s: int
    t: int
    num_points: int
    num_lines: int
    verdicts: list[dict] = field(default_factory=list)
    cover_sizes: list[int] = field(default_factory=list)
    eliminated_by: str | None = None
    divergence: str | None = None
    combination_count: int | None = None
    combinations: list[list[int]] | None = None
    graphs_built: int = 0
    srg_verdicts: list[dict] = field(default_factory=list)
    pseudo_geometric: list[dict] = field(default_factory=list)
    quadrangles: list[dict] = field(default_factory=list)
    quadrangle_objects: list = field(default_factory=list, compare=False, repr=False)

    @property
    def surviving(self) -> bool:
        return self.eliminated_by is None

    def candidate(self) -> OrderCandidate:
        return OrderCandidate(self.s, self.t)

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "num_points": str(self.num_points),
            "num_lines": str(self.num_lines),
            "verdicts": [dict(v) for v in self.verdicts],
            "cover_sizes": list(self.cover_sizes),
            "eliminated_by": self.eliminated_by,
            "divergence": self.divergence,
            "combination_count": self.combination_count,
            "combinations": None if self.combinations is None
            else [list(c) for c in self.combinations],
            "graphs_built": self.graphs_built,
            "srg_verdicts": [dict(v) for v in self.srg_verdicts],
            "pseudo_geometric": [dict(v) for v in self.pseudo_geometric],
            "quadrangles": [dict(q) for q in self.quadrangles],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CandidateRecord":
        return cls(
            s=int(d["s"]),
            t=int(d["t"]),
            num_points=int(d["num_points"]),
            num_lines=int(d["num_lines"]),
            verdicts=[dict(v) for v in d["verdicts"]],
            cover_sizes=[int(k) for k in d["cover_sizes"]],
            eliminated_by=d["eliminated_by"],
            divergence=d["divergence"],
            combination_count=d["combination_count"],
            combinations=None if d["combinations"] is None
            else [[int(i) for i in c] for c in d["combinations"]],
            graphs_built=int(d["graphs_built"]),
            srg_verdicts=[dict(v) for v in d["srg_verdicts"]],
            pseudo_geometric=[dict(v) for v in d["pseudo_geometric"]],
            quadrangles=[dict(q) for q in d["quadrangles"]],
        )


@dataclass
class CaseRecord:
    """Outcome of one case, shaped like a report row block."""

    group_name: str
    maximal_name: str
    num_points: int
    candidates: list[CandidateRecord] = field(default_factory=list)
    subdegrees: list[int] | None = None
    resolution: str = RESOLVED
    index_only: bool = False
    novelty: bool | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def surviving_candidates(self) -> list[CandidateRecord]:
        return [c for c in self.candidates if c.surviving]

    @property
    def gq_names(self) -> list[str]:
        return [q["name"] for c in self.candidates for q in c.quadrangles]

    @property
    def no_gq(self) -> bool:
        return self.resolution == RESOLVED and not self.gq_names

    def to_dict(self) -> dict:
        return {
            "group": self.group_name,
            "maximal": self.maximal_name,
            "num_points": str(self.num_points),
            "candidates": [c.to_dict() for c in self.candidates],
            "subdegrees": None if self.subdegrees is None else list(self.subdegrees),
            "resolution": self.resolution,
            "index_only": self.index_only,
            "novelty": self.novelty,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CaseRecord":
        return cls(
            group_name=d["group"],
            maximal_name=d["maximal"],
            num_points=int(d["num_points"]),
            candidates=[CandidateRecord.from_dict(c) for c in d["candidates"]],
            subdegrees=None if d["subdegrees"] is None
            else [int(x) for x in d["subdegrees"]],
            resolution=d["resolution"],
            index_only=bool(d["index_only"]),
            novelty=d["novelty"],
            notes=list(d["notes"]),
        )


class _StageTimer:
    """Cooperative wall-clock budget, reset at each stage boundary."""

    def __init__(self, budget: float):
        self.budget = budget
        self.stage = ""
        self.started = time.monotonic()

    def begin(self, stage: str) -> None:
        self.stage = stage
        self.started = time.monotonic()

    def check(self) -> None:
        if time.monotonic() - self.started > self.budget:
            raise StageTimeoutError(
                f"stage {self.stage!r} exceeded its {self.budget:g}s budget"
            )


def neighborhood_combinations(action: CosetActionData,
                              cand: OrderCandidate) -> list[tuple[int, ...]]:
    """All suborbit id sets whose sizes sum to s(t+1), in sorted order."""
    target = cand.s * (cand.t + 1)
    by_size: dict[int, list[int]] = {}
    for i, orb in enumerate(action.suborbits):
        by_size.setdefault(len(orb), []).append(i)
    sizes = tuple(len(orb) for orb in action.suborbits)
    out: list[tuple[int, ...]] = []
    for sol in knapsack(sizes, target, mode=BOUNDED):
        pools = [itertools.combinations(by_size[v], m)
                 for v, m in zip(sol.values, sol.multiplicities)]
        for pick in itertools.product(*pools):
            out.append(tuple(sorted(itertools.chain.from_iterable(pick))))
    out.sort()
    return out


def _arithmetic_verdicts(case: CaseInput, crec: CandidateRecord,
                         options: PipelineOptions) -> None:
    """Run both arithmetic tests, recording every verdict in order."""
    cand = crec.candidate()
    v = orders_of_elements_test(case.group_order, case.maximal_order, cand)
    crec.verdicts.append({"test": "orders_of_elements", "verdict": v})
    if v == ELIMINATE:
        crec.eliminated_by = "orders_of_elements"
        return
    strict_v = line_orbits_test(case.all_indices, cand, mode=STRICT,
                                primitivity_refinement=options.refine_k)
    sound_v = line_orbits_test(case.all_indices, cand, mode=SOUND,
                               primitivity_refinement=options.refine_k)
    # a keep under the bounded count model must also hold unbounded
    assert not (strict_v == KEEP and sound_v == ELIMINATE)
    crec.verdicts.append({"test": "line_orbits_strict", "verdict": strict_v})
    crec.verdicts.append({"test": "line_orbits_sound", "verdict": sound_v})
    crec.cover_sizes = line_orbit_candidates(case.all_indices, cand)
    if strict_v != sound_v:
        crec.divergence = (
            f"({crec.s},{crec.t}): strict mode eliminates but sound mode keeps;"
            f" cover sizes {crec.cover_sizes}"
        )
    active = strict_v if options.mode == STRICT else sound_v
    if active == ELIMINATE:
        crec.eliminated_by = f"line_orbits_{options.mode}"


def _emit_graph(g, case: CaseInput, crec: CandidateRecord, combo, options) -> None:
    os.makedirs(options.emit_graphs, exist_ok=True)
    tag = "-".join(str(i) for i in combo)
    fname = (f"{_slug(case.group_name)}_case{case.ordinal}"
             f"_{_slug(case.maximal_name)}_s{crec.s}t{crec.t}_ids{tag}.edges")
    with open(os.path.join(options.emit_graphs, fname), "w", encoding="utf-8") as fh:
        fh.write("\n".join(edge_list_lines(g)) + "\n")


def _emit_quadrangle(gq, case: CaseInput, crec: CandidateRecord, combo, options) -> None:
    from .bundleio import save_gq

    os.makedirs(options.emit_gq, exist_ok=True)
    tag = "-".join(str(i) for i in combo)
    fname = (f"{_slug(case.group_name)}_case{case.ordinal}"
             f"_{_slug(case.maximal_name)}_s{crec.s}t{crec.t}_ids{tag}.json")
    save_gq(os.path.join(options.emit_gq, fname), gq)


def _slug(name: str) -> str:
    return "".join(ch if ch.isalnum() else "-" for ch in name).strip("-").lower()


def _verify_line_action(gq, action: CosetActionData) -> None:
    """Every group generator must permute the extracted line set."""
    line_set = set(gq.lines)
    for gi, imgs in enumerate(action.generator_images):
        for line in gq.lines:
            moved = tuple(sorted(int(imgs[p - 1]) for p in line))
            if moved not in line_set:
                raise MalformedInputError(
                    f"generator {gi + 1} does not preserve the extracted line set"
                )


def _graph_stage(case: CaseInput, rec: CaseRecord, action: CosetActionData,
                 timer: _StageTimer, options: PipelineOptions) -> None:
    timer.begin("neighborhood_combinations")
    for crec in rec.surviving_candidates:
        timer.check()
        combos = neighborhood_combinations(action, crec.candidate())
        crec.combination_count = len(combos)
        crec.combinations = [list(c) for c in combos]
    timer.begin("graphs")
    for crec in rec.surviving_candidates:
        cand = crec.candidate()
        for combo in crec.combinations or []:
            timer.check()
            ids = tuple(combo)
            try:
                g = build_orbital_graph(action, ids,
                                        source=f"{case.group_name}/{case.maximal_name}")
            except RejectedCombinationError as exc:
                crec.srg_verdicts.append(
                    {"combination": list(ids), "passed": False, "reason": str(exc)}
                )
                continue
            crec.graphs_built += 1
            if options.emit_graphs:
                _emit_graph(g, case, crec, ids, options)
            srg = check_srg(g, cand)
            crec.srg_verdicts.append(
                {"combination": list(ids), "passed": srg.passed,
                 "reason": srg.reason or ""}
            )
            if not srg.passed:
                continue
            found = extract_gq(g, cand, srg_checked=True)
            if isinstance(found, PseudoGeometric):
                crec.pseudo_geometric.append(
                    {"combination": list(ids), "reason": found.reason}
                )
                continue
            _verify_line_action(found, action)
            name = classify_quadrangle(found)
            crec.quadrangles.append(
                {"combination": list(ids), "name": name,
                 "s": found.s, "t": found.t, "line_count": found.line_count}
            )
            crec.quadrangle_objects.append(found)
            if options.emit_gq:
                _emit_quadrangle(found, case, crec, ids, options)


def run_case(case: CaseInput, options: PipelineOptions | None = None) -> CaseRecord:
    """Screen one maximal class, going as far as the inputs allow."""
    options = options or PipelineOptions()
    rec = CaseRecord(case.group_name, case.maximal_name, case.index,
                     index_only=case.index_only, novelty=case.novelty)
    timer = _StageTimer(options.stage_timeout)

    timer.begin("arithmetic")
    for cand in enumerate_orders(case.index):
        crec = CandidateRecord(cand.s, cand.t, cand.num_points, cand.num_lines)
        rec.candidates.append(crec)
        _arithmetic_verdicts(case, crec, options)
        if crec.divergence:
            note = f"{case.group_name}/{case.maximal_name} {crec.divergence}"
            rec.notes.append(note)
            log.warning(note)

    survivors = rec.surviving_candidates
    if not survivors:
        return rec

    if case.index_only:
        rec.notes.append(
            f"index-only entry: {len(survivors)} candidate(s) survive arithmetic;"
            " group-level stages skipped"
        )
        rec.resolution = UNRESOLVED
        return rec

    if case.index > options.degree_cap:
        rec.notes.append(
            f"coset degree {case.index} exceeds the cap {options.degree_cap}"
        )
        rec.resolution = UNRESOLVED
        return rec

    try:
        timer.begin("coset_action")
        timer.check()
        action = coset_action(case.group, case.maximal, degree_cap=options.degree_cap)
        timer.check()
        rec.subdegrees = sorted(action.subdegrees)
        _graph_stage(case, rec, action, timer, options)
    except (ResourceLimitError, StageTimeoutError) as exc:
        rec.notes.append(f"stopped: {exc}")
        rec.resolution = UNRESOLVED
        return rec

    return rec


def run_cases(cases: list[CaseInput],
              options: PipelineOptions | None = None) -> list[CaseRecord]:
    """Run cases independently, preserving their input order."""
    options = options or PipelineOptions()
    return [run_case(case, options) for case in cases]


def overall_verdict(records: list[CaseRecord]) -> str:
    """Bundle-level summary: no GQ only when every case is resolved clean."""
    names = [n for r in records for n in r.gq_names]
    if names:
        return "GQ found: " + ", ".join(names)
    if any(r.resolution == UNRESOLVED for r in records):
        return "unresolved cases present"
    return "no GQ"


def run_bundle(path: str, options: PipelineOptions | None = None):
    """Load a bundle file, run every case, and render the summary table."""
    from .bundleio import emit_report, load_bundle

    options = options or PipelineOptions()
    bundle = load_bundle(path)
    records = run_cases(bundle.cases(), options)
    return records, emit_report(records, "text")
