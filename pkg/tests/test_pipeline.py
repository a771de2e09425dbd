"""Case orchestration: combination search, staging, records and verdicts."""

import itertools
import json

import pytest

from gqprim.arith import SOUND, OrderCandidate
from gqprim.bundleio import data_path, load_bundle, load_gq
from gqprim.pipeline import (
    RESOLVED,
    UNRESOLVED,
    CandidateRecord,
    CaseInput,
    CaseRecord,
    PipelineOptions,
    neighborhood_combinations,
    overall_verdict,
    run_bundle,
    run_case,
    run_cases,
)
from gqprim.permgroup import coset_action


@pytest.fixture(scope="module")
def a6_bundle():
    return load_bundle(data_path("a6.json"))


@pytest.fixture(scope="module")
def s4_case(a6_bundle):
    return next(c for c in a6_bundle.cases() if c.maximal_name == "S4")


def subset_sum_oracle(action, cand):
    """Every suborbit id subset whose sizes sum to the target valence."""
    target = cand.s * (cand.t + 1)
    n = len(action.suborbits)
    out = []
    for r in range(1, n + 1):
        for pick in itertools.combinations(range(n), r):
            if sum(len(action.suborbits[i]) for i in pick) == target:
                out.append(tuple(pick))
    return sorted(out)


class TestNeighborhoodCombinations:
    def test_matches_exhaustive_search(self, s4_case):
        action = coset_action(s4_case.group, s4_case.maximal)
        assert action.subdegrees == [6, 8]
        for s in range(2, 10):
            for t in range(2, 10):
                cand = OrderCandidate(s, t)
                assert neighborhood_combinations(action, cand) == \
                    subset_sum_oracle(action, cand)

    def test_repeated_sizes_expand_per_suborbit(self):
        # four suborbits of size 24 force per-size combination expansion
        case = next(c for c in load_bundle(data_path("m11.json")).cases()
                    if c.index == 165)
        action = coset_action(case.group, case.maximal)
        assert action.subdegrees == [8, 12, 24, 24, 24, 24, 48]
        for s, t in [(4, 8), (2, 2), (3, 5), (2, 17), (5, 6), (8, 3)]:
            cand = OrderCandidate(s, t)
            assert neighborhood_combinations(action, cand) == \
                subset_sum_oracle(action, cand)
        assert len(neighborhood_combinations(action, OrderCandidate(4, 8))) == 4


class TestRunCase:
    def test_no_order_candidates_resolves(self):
        case = CaseInput("toy", 24, "pair", 12, 2, [12])
        rec = run_case(case)
        assert rec.candidates == []
        assert rec.resolution == RESOLVED
        assert rec.no_gq

    def test_index_only_survivor_is_unresolved(self):
        case = CaseInput("M11", 7920, "M9.2", 165, 48, [11, 12, 55, 66, 165])
        rec = run_case(case)
        assert [(c.s, c.t) for c in rec.candidates] == [(4, 8)]
        crec = rec.candidates[0]
        assert crec.surviving
        assert {v["test"]: v["verdict"] for v in crec.verdicts} == {
            "orders_of_elements": "keep",
            "line_orbits_strict": "keep",
            "line_orbits_sound": "keep",
        }
        assert rec.resolution == UNRESOLVED
        assert rec.notes == [
            "index-only entry: 1 candidate(s) survive arithmetic;"
            " group-level stages skipped"
        ]

    def test_degree_cap_stops_before_cosets(self, s4_case):
        rec = run_case(s4_case, PipelineOptions(degree_cap=10))
        assert rec.resolution == UNRESOLVED
        assert rec.subdegrees is None
        assert any("exceeds the cap 10" in n for n in rec.notes)

    def test_negative_stage_budget_times_out(self, s4_case):
        rec = run_case(s4_case, PipelineOptions(stage_timeout=-1.0))
        assert rec.resolution == UNRESOLVED
        assert any(n.startswith("stopped:") for n in rec.notes)

    def test_s4_case_finds_w32(self, s4_case):
        rec = run_case(s4_case)
        assert rec.resolution == RESOLVED
        assert rec.subdegrees == [6, 8]
        crec = rec.candidates[0]
        assert (crec.s, crec.t) == (2, 2)
        assert crec.combination_count == 1
        assert crec.graphs_built == 1
        assert crec.srg_verdicts[0]["passed"]
        assert rec.gq_names == ["W(3,2)"]
        gq = crec.quadrangle_objects[0]
        assert gq.verify() is gq
        assert (gq.s, gq.t, gq.line_count) == (2, 2, 15)

    def test_emitted_artifacts_load_back(self, s4_case, tmp_path):
        gdir = tmp_path / "graphs"
        qdir = tmp_path / "quads"
        options = PipelineOptions(emit_graphs=str(gdir), emit_gq=str(qdir))
        rec = run_case(s4_case, options)
        edges = sorted(gdir.iterdir())
        quads = sorted(qdir.iterdir())
        assert len(edges) == 1 and len(quads) == 1
        lines = edges[0].read_text().strip().splitlines()
        assert len(lines) == 15 * 6 // 2
        assert all(len(ln.split()) == 2 for ln in lines)
        loaded = load_gq(str(quads[0]))
        assert loaded.lines == rec.candidates[0].quadrangle_objects[0].lines


class TestBundleRuns:
    def test_a6_bundle_end_to_end(self):
        records, report = run_bundle(data_path("a6.json"))
        assert [r.maximal_name for r in records] == \
            ["A5", "A5'", "3^2:4", "S4", "S4'"]
        assert overall_verdict(records) == "GQ found: W(3,2), W(3,2)"
        by_name = {r.maximal_name: r for r in records}
        assert by_name["S4"].gq_names == ["W(3,2)"]
        assert by_name["S4'"].gq_names == ["W(3,2)"]
        assert by_name["A5"].no_gq and by_name["3^2:4"].no_gq
        assert isinstance(report, str) and "W(3,2)" in report

    def test_run_cases_preserves_order(self, a6_bundle):
        cases = a6_bundle.cases()[:2]
        records = run_cases(cases, PipelineOptions())
        assert [r.maximal_name for r in records] == [c.maximal_name for c in cases]

    def test_overall_verdict_branches(self):
        clean = CaseRecord("G", "M", 10)
        open_rec = CaseRecord("G", "M", 10, resolution=UNRESOLVED)
        assert overall_verdict([clean]) == "no GQ"
        assert overall_verdict([clean, open_rec]) == "unresolved cases present"


class TestRecordSerialization:
    def test_case_record_round_trip(self, s4_case):
        rec = run_case(s4_case)
        blob = json.dumps(rec.to_dict())
        back = CaseRecord.from_dict(json.loads(blob))
        assert back == rec
        assert back.gq_names == ["W(3,2)"]
        assert back.candidates[0].quadrangle_objects == []

    def test_unresolved_record_round_trip(self):
        case = CaseInput("M11", 7920, "M9.2", 165, 48, [11, 12, 55, 66, 165])
        rec = run_case(case)
        back = CaseRecord.from_dict(json.loads(json.dumps(rec.to_dict())))
        assert back.resolution == UNRESOLVED
        assert back.candidates == rec.candidates
        assert back.notes == rec.notes

    def test_divergent_case_records_note(self):
        src = next(c for c in load_bundle(data_path("j22.json")).cases()
                   if c.maximal_name == "3.A6.2^2")
        case = CaseInput(src.group_name, src.group_order, src.maximal_name,
                         src.index, src.maximal_order, src.all_indices)
        rec = run_case(case, PipelineOptions(mode=SOUND))
        crec = rec.candidates[0]
        assert (crec.s, crec.t) == (9, 3)
        assert crec.divergence is not None
        assert crec.surviving
        assert any("strict mode eliminates but sound mode keeps" in n
                   for n in rec.notes)
        strict_rec = run_case(case, PipelineOptions())
        assert strict_rec.candidates[0].eliminated_by == "line_orbits_strict"
