"""Bundle and quadrangle file formats, validation, and report rendering."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib.resources import files

from .errors import BundleFormatError, MalformedInputError, NotASubgroupError
from .gq import QuadrangleData
from .permgroup import PermGroup, Permutation, require_subgroup, subgroup_index
from .pipeline import RESOLVED, CaseInput, CaseRecord, overall_verdict

FORMAT = "gqprim/1"

COMPUTED = "computed"
UNVERIFIABLE = "unverifiable: index-only"


@dataclass
class MaximalEntry:
    """One maximal subgroup class of a bundle, validated on load."""

    name: str
    index: int
    order: int
    generators: list[list[int]] | None
    novelty: bool | None
    provenance: str
    verification: str
    subgroup: PermGroup | None = field(default=None, repr=False)


@dataclass
class Bundle:
    """A group with its maximal subgroup classes, as loaded from disk."""

    name: str
    degree: int
    order: int
    generators: list[list[int]]
    maximals: list[MaximalEntry]
    provenance: str
    verification: str
    group: PermGroup | None = field(default=None, repr=False)
    path: str = ""

    def cases(self) -> list[CaseInput]:
        all_indices = [e.index for e in self.maximals]
        return [
            CaseInput(
                group_name=self.name,
                group_order=self.order,
                maximal_name=e.name,
                index=e.index,
                maximal_order=e.order,
                all_indices=all_indices,
                group=self.group if e.subgroup is not None else None,
                maximal=e.subgroup,
                novelty=e.novelty,
                ordinal=i,
            )
            for i, e in enumerate(self.maximals)
        ]

    def verify_words(self, seed: int, count: int = 100) -> None:
        """Spot-check every built stabilizer chain with random words."""
        if self.group is not None:
            self.group.verify_random_words(seed, count)
        for e in self.maximals:
            if e.subgroup is not None:
                e.subgroup.verify_random_words(seed, count)


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise BundleFormatError(
            f"{path}: syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _require_format(doc: dict, path: str) -> None:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise BundleFormatError(
            f"{path}: missing or unsupported format marker, expected {FORMAT!r}"
        )


def _parse_big(value, where: str, fieldname: str) -> int:
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str) and value.isdigit():
        return int(value)
    raise BundleFormatError(
        f"{where}: field {fieldname!r} must be a decimal string, got {value!r}"
    )


def _parse_generators(raw, degree: int, where: str) -> list[Permutation]:
    if not isinstance(raw, list):
        raise BundleFormatError(f"{where}: 'generators' must be a list")
    gens = []
    for i, images in enumerate(raw):
        try:
            g = Permutation.from_images(images)
        except (MalformedInputError, ValueError, TypeError) as exc:
            raise BundleFormatError(f"{where}, generator {i + 1}: {exc}") from exc
        if g.degree != degree:
            raise BundleFormatError(
                f"{where}, generator {i + 1}: degree {g.degree} does not match"
                f" declared degree {degree}"
            )
        gens.append(g)
    return gens


def _load_maximal(raw: dict, pos: int, bundle_name: str, degree: int,
                  group: PermGroup | None, group_order: int) -> MaximalEntry:
    where = f"{bundle_name}: maximals[{pos}]"
    if not isinstance(raw, dict) or not isinstance(raw.get("name"), str):
        raise BundleFormatError(f"{where}: entry must have a string 'name'")
    where = f"{where} ({raw['name']})"
    novelty = raw.get("novelty")
    if novelty is not None and not isinstance(novelty, bool):
        raise BundleFormatError(f"{where}: 'novelty' must be a boolean")
    declared_order = raw.get("order")
    declared_index = raw.get("index")
    if declared_order is not None:
        declared_order = _parse_big(declared_order, where, "order")
    if declared_index is not None:
        declared_index = _parse_big(declared_index, where, "index")

    if raw.get("generators") is not None:
        if group is None:
            raise BundleFormatError(
                f"{where}: subgroup generators need group generators to check against"
            )
        gens = _parse_generators(raw["generators"], degree, where)
        sub = PermGroup(gens, degree=degree)
        try:
            require_subgroup(group, sub)
        except (MalformedInputError, NotASubgroupError) as exc:
            raise BundleFormatError(f"{where}: {exc}") from exc
        order = sub.order
        index = subgroup_index(group, sub)
        if declared_order is not None and declared_order != order:
            raise BundleFormatError(
                f"{where}: declared order {declared_order} != computed {order}"
            )
        if declared_index is not None and declared_index != index:
            raise BundleFormatError(
                f"{where}: declared index {declared_index} != computed {index}"
            )
        return MaximalEntry(raw["name"], index, order, [g.images for g in gens],
                            novelty, raw.get("provenance", ""), COMPUTED, sub)

    # arithmetic-only entry: order and index are taken on trust
    if declared_index is None and declared_order is None:
        raise BundleFormatError(
            f"{where}: entry without generators needs 'index' or 'order'"
        )
    if declared_index is None:
        if group_order % declared_order:
            raise BundleFormatError(
                f"{where}: declared order {declared_order} does not divide"
                f" the group order"
            )
        declared_index = group_order // declared_order
    if declared_order is None:
        if group_order % declared_index:
            raise BundleFormatError(
                f"{where}: declared index {declared_index} does not divide"
                f" the group order"
            )
        declared_order = group_order // declared_index
    if declared_order * declared_index != group_order:
        raise BundleFormatError(
            f"{where}: order {declared_order} times index {declared_index}"
            f" does not equal the group order"
        )
    return MaximalEntry(raw["name"], declared_index, declared_order, None,
                        novelty, raw.get("provenance", ""), UNVERIFIABLE, None)


def load_bundle(path: str) -> Bundle:
    """Load and fully cross-validate a group bundle file."""
    doc = _read_json(path)
    _require_format(doc, path)
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise BundleFormatError(f"{path}: bundle needs a nonempty string 'name'")
    degree = doc.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise BundleFormatError(f"{name}: 'degree' must be a positive integer")

    raw_gens = doc.get("generators") or []
    group = None
    if raw_gens:
        gens = _parse_generators(raw_gens, degree, f"{name}: group")
        group = PermGroup(gens, degree=degree)
        order = group.order
        verification = COMPUTED
        if doc.get("order") is not None:
            declared = _parse_big(doc["order"], f"{name}: group", "order")
            if declared != order:
                raise BundleFormatError(
                    f"{name}: group: declared order {declared} != computed {order}"
                )
    else:
        if doc.get("order") is None:
            raise BundleFormatError(
                f"{name}: group without generators needs a declared 'order'"
            )
        order = _parse_big(doc["order"], f"{name}: group", "order")
        verification = UNVERIFIABLE

    raw_maximals = doc.get("maximals")
    if not isinstance(raw_maximals, list):
        raise BundleFormatError(f"{name}: 'maximals' must be a list")
    maximals = [
        _load_maximal(raw, i, name, degree, group, order)
        for i, raw in enumerate(raw_maximals)
    ]
    return Bundle(name, degree, order, [list(map(int, g)) for g in raw_gens],
                  maximals, doc.get("provenance", ""), verification, group, path)


def load_gq(path: str) -> QuadrangleData:
    """Load a quadrangle file, re-verifying every axiom."""
    doc = _read_json(path)
    _require_format(doc, path)
    for key in ("points", "s", "t", "lines"):
        if key not in doc:
            raise BundleFormatError(f"{path}: missing field {key!r}")
    for key in ("points", "s", "t"):
        if not isinstance(doc[key], int) or isinstance(doc[key], bool):
            raise BundleFormatError(f"{path}: field {key!r} must be an integer")
    if not isinstance(doc["lines"], list):
        raise BundleFormatError(f"{path}: 'lines' must be a list of point lists")
    gq = QuadrangleData.from_lines(doc["points"], doc["s"], doc["t"],
                                   doc["lines"], name=doc.get("name", ""))
    return gq.verify()


def save_gq(path: str, gq: QuadrangleData) -> None:
    doc = {
        "format": FORMAT,
        "name": gq.name,
        "points": gq.point_count,
        "s": gq.s,
        "t": gq.t,
        "lines": [list(line) for line in gq.lines],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


@dataclass
class GroupFile:
    """A bare permutation group file, for the line-orbit commands."""

    name: str
    group: PermGroup


def load_group(path: str) -> GroupFile:
    """Load a standalone group file and rebuild its chain."""
    doc = _read_json(path)
    _require_format(doc, path)
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise BundleFormatError(f"{path}: group file needs a nonempty 'name'")
    degree = doc.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise BundleFormatError(f"{path}: 'degree' must be a positive integer")
    gens = _parse_generators(doc.get("generators") or [], degree, f"{name}: group")
    if not gens:
        raise BundleFormatError(f"{path}: group file needs at least one generator")
    group = PermGroup(gens, degree=degree)
    if doc.get("order") is not None:
        declared = _parse_big(doc["order"], name, "order")
        if declared != group.order:
            raise BundleFormatError(
                f"{name}: declared order {declared} != computed {group.order}"
            )
    return GroupFile(name, group)


def save_group(path: str, name: str, group: PermGroup,
               provenance: str = "") -> None:
    doc = {
        "format": FORMAT,
        "name": name,
        "degree": group.degree,
        "order": str(group.order),
        "provenance": provenance,
        "generators": [g.images for g in group.generators],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def data_path(filename: str) -> str:
    """Absolute path of a bundled corpus file."""
    return str(files("gqprim").joinpath("data", filename))


def list_corpus() -> list[str]:
    """Bundled corpus filenames, sorted."""
    root = files("gqprim").joinpath("data")
    return sorted(os.path.basename(str(p)) for p in root.iterdir()
                  if str(p).endswith(".json"))


def collapse_sizes(sizes: list[int]) -> str:
    """Run-collapsed rendering, e.g. [8,12,24,24,24,24,48] -> 8,12,24^4,48."""
    out = []
    i = 0
    while i < len(sizes):
        j = i
        while j < len(sizes) and sizes[j] == sizes[i]:
            j += 1
        out.append(f"{sizes[i]}^{j - i}" if j - i > 1 else str(sizes[i]))
        i = j
    return ",".join(out)


HEADERS = ["Group", "Maximal", "(s,t)", "(s,t)*", "Subdegrees", "NC", "GQ"]


def _case_rows(rec: CaseRecord) -> list[list[str]]:
    sub = "-" if rec.subdegrees is None else collapse_sizes(rec.subdegrees)
    if not rec.candidates:
        return [[rec.group_name, rec.maximal_name, "-", "-", sub, "-", "-"]]
    rows = []
    for c in rec.candidates:
        st = f"({c.s},{c.t})"
        st_star = st if c.surviving else "-"
        nc = "-" if c.combination_count is None else str(c.combination_count)
        if c.quadrangles:
            gq = "; ".join(q["name"] for q in c.quadrangles)
        elif c.surviving and c.combination_count is not None:
            # graph stage ran and produced nothing feasible
            gq = "x"
        else:
            gq = "-"
        rows.append([rec.group_name, rec.maximal_name, st, st_star, sub, nc, gq])
    return rows


def emit_report(records: list[CaseRecord], format: str = "text") -> str:
    """Render case records as the summary table or as lossless JSON."""
    if format == "json":
        doc = {
            "format": FORMAT,
            "overall": overall_verdict(records),
            "records": [r.to_dict() for r in records],
        }
        return json.dumps(doc, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    rows = [row for rec in records for row in _case_rows(rec)]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(HEADERS)]
    lines = [
        " | ".join(h.ljust(w) for h, w in zip(HEADERS, widths)).rstrip(),
        "-+-".join("-" * w for w in widths),
    ]
    for r in rows:
        lines.append(" | ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    notes = [n for rec in records for n in rec.notes]
    unresolved = [rec for rec in records if rec.resolution != RESOLVED]
    body = "\n".join(lines)
    if notes:
        body += "\n" + "\n".join(f"note: {n}" for n in notes)
    if unresolved:
        body += "\n" + "\n".join(
            f"unresolved: {rec.group_name}/{rec.maximal_name}" for rec in unresolved
        )
    body += f"\noverall: {overall_verdict(records)}\n"
    return body


def load_report(text: str) -> list[CaseRecord]:
    """Parse emit_report JSON output back into case records."""
    doc = json.loads(text)
    if doc.get("format") != FORMAT:
        raise BundleFormatError(f"report: unsupported format, expected {FORMAT!r}")
    return [CaseRecord.from_dict(d) for d in doc["records"]]
