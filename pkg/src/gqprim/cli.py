"""Command line front end for the screening pipeline."""

from __future__ import annotations

import argparse
import sys

from .arith import SOUND, STRICT
from .errors import GqprimError, MalformedInputError
from .gq import line_orbits
from .permgroup import DEFAULT_DEGREE_CAP
from .pipeline import (
    DEFAULT_SEED,
    DEFAULT_STAGE_TIMEOUT,
    UNRESOLVED,
    CaseInput,
    PipelineOptions,
    run_cases,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNRESOLVED = 2


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=[STRICT, SOUND], default=STRICT,
                   help="line-orbit cover counting model (default strict)")
    p.add_argument("--refine-k", action="store_true",
                   help="drop cover sizes ruled out for primitive actions")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gqprim",
        description="Decide point-primitive generalised quadrangle actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline on a bundle file")
    p.add_argument("bundle", help="bundle JSON file")
    _add_run_flags(p)
    p.add_argument("--degree-cap", type=int, default=DEFAULT_DEGREE_CAP, metavar="N")
    p.add_argument("--stage-timeout", type=float, default=DEFAULT_STAGE_TIMEOUT,
                   metavar="SECS")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, metavar="N",
                   help="seed for the random-word chain checks")
    p.add_argument("--emit-graphs", metavar="DIR")
    p.add_argument("--emit-gq", metavar="DIR")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("screen", help="arithmetic-only screening from raw numbers")
    p.add_argument("--order", required=True, metavar="DEC",
                   help="group order as a decimal string")
    p.add_argument("--indices", required=True, metavar="DEC,DEC,...",
                   help="comma-separated maximal subgroup indices")
    _add_run_flags(p)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("hemisystem", help="line-orbit structure of a group on a GQ")
    p.add_argument("gq", help="quadrangle JSON file")
    p.add_argument("group", help="group JSON file")

    p = sub.add_parser("verify-gq", help="check the quadrangle axioms of a file")
    p.add_argument("gq", help="quadrangle JSON file")

    return parser


def _cmd_analyze(args) -> int:
    from .bundleio import emit_report, load_bundle

    options = PipelineOptions(
        mode=args.mode,
        refine_k=args.refine_k,
        degree_cap=args.degree_cap,
        stage_timeout=args.stage_timeout,
        seed=args.seed,
        emit_graphs=args.emit_graphs,
        emit_gq=args.emit_gq,
    )
    bundle = load_bundle(args.bundle)
    bundle.verify_words(options.seed)
    records = run_cases(bundle.cases(), options)
    sys.stdout.write(emit_report(records, args.format))
    if any(r.resolution == UNRESOLVED for r in records):
        return EXIT_UNRESOLVED
    return EXIT_OK


def _parse_decimal(text: str, what: str) -> int:
    if not text.isdigit():
        raise MalformedInputError(f"{what} must be a decimal integer, got {text!r}")
    return int(text)


def _cmd_screen(args) -> int:
    from .bundleio import emit_report

    order = _parse_decimal(args.order, "--order")
    indices = [_parse_decimal(part, "--indices entry")
               for part in args.indices.split(",") if part]
    if order < 1 or not indices:
        raise MalformedInputError("--order and --indices must be positive")
    for b in indices:
        if order % b:
            raise MalformedInputError(f"index {b} does not divide the order")
    options = PipelineOptions(mode=args.mode, refine_k=args.refine_k)
    cases = [
        CaseInput(
            group_name=f"G(order {order})",
            group_order=order,
            maximal_name=f"index {b}",
            index=b,
            maximal_order=order // b,
            all_indices=indices,
        )
        for b in indices
    ]
    records = run_cases(cases, options)
    sys.stdout.write(emit_report(records, args.format))
    if any(r.resolution == UNRESOLVED for r in records):
        return EXIT_UNRESOLVED
    return EXIT_OK


def _cmd_hemisystem(args) -> int:
    from .bundleio import load_group, load_gq

    gq = load_gq(args.gq)
    gf = load_group(args.group)
    report = line_orbits(gq, gf.group)
    sizes = ",".join(str(n) for n in report.orbit_sizes)
    ks = ",".join("-" if k is None else str(k) for k in report.k_values)
    sys.stdout.write(
        f"quadrangle: order ({gq.s},{gq.t}), {gq.point_count} points,"
        f" {gq.line_count} lines\n"
        f"group: {gf.name} of order {gf.group.order}\n"
        f"line orbits: {sizes}\n"
        f"k values: {ks}\n"
        f"classification: {report.classification}\n"
    )
    return EXIT_OK


def _cmd_verify_gq(args) -> int:
    from .bundleio import load_gq

    gq = load_gq(args.gq)
    sys.stdout.write(
        f"valid generalised quadrangle of order ({gq.s},{gq.t}):"
        f" {gq.point_count} points, {gq.line_count} lines\n"
    )
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "screen": _cmd_screen,
        "hemisystem": _cmd_hemisystem,
        "verify-gq": _cmd_verify_gq,
    }
    try:
        return handlers[args.command](args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except GqprimError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
