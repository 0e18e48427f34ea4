"""Command-line front end: `python -m src.cli <command> ...`.

Exit codes: 0 on success (an empty catalog is a valid answer), 1 when
verification finds a counterexample, 2 on usage or input errors.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from src.core.compositions import compositions, dual_set
from src.core.errors import InvalidInput, RuncorrError
from src.core.sequence import parse_sequence_literal
from src.helper.logger import get_logger
from src.services.applications import (
    DiffSetSpec,
    enumerate_zcz,
    hadamard_search,
    verify_difference_set,
)
from src.services.report_service import (
    DEFAULT_PATTERN_RUNS,
    ZczSummary,
    build_report,
    catalog_entry,
    render_catalog,
    render_catalog_json,
    render_json,
    render_text,
)
from src.services.verify_service import DEFAULT_RECURRENCE_DEPTH, VerifyService

logger = get_logger("cli")

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        print(text)
        return
    Path(out).write_text(text + "\n", encoding="utf-8")
    logger.info(f"wrote {out}")


def _read_literals(path: str) -> List[str]:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InvalidInput(f"cannot read {path}: {e.strerror}") from None
    literals = [line.strip() for line in lines]
    return [line for line in literals if line and not line.startswith("#")]


def cmd_analyze(args: argparse.Namespace) -> int:
    literals = _read_literals(args.file) if args.file else []
    if args.sequence is not None:
        literals.insert(0, args.sequence)
    if not literals:
        raise InvalidInput("no sequence given")
    reports = [build_report(parse_sequence_literal(text), args.max_pattern_runs) for text in literals]
    if args.json:
        _emit(render_json(reports), args.out)
    else:
        _emit("\n\n".join(render_text(report) for report in reports), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    service = VerifyService(args.workers)
    if args.exhaustive:
        summary = service.exhaustive(args.period, args.recurrence_depth)
    else:
        summary = service.random(args.period, args.samples, args.seed,
                                 args.max_period, args.recurrence_depth)
    print(summary.model_dump_json(indent=2) if args.json else summary.render())
    return EXIT_OK if summary.passed else EXIT_COUNTEREXAMPLE


def cmd_compositions(args: argparse.Namespace) -> int:
    listing = compositions(args.n)
    if args.duals is None:
        print("\n".join(str(p) for p in listing))
        return EXIT_OK
    t = args.n if args.duals == 0 else args.duals
    if t != args.n:
        raise InvalidInput(f"dual sets Q_i({t}) are defined for compositions of {t}, not {args.n}")
    for p in listing:
        print(f"{p}\t{dual_set(p, t).render('table')}")
    return EXIT_OK


def cmd_enumerate_zcz(args: argparse.Namespace) -> int:
    found = enumerate_zcz(args.period, args.zone, args.workers)
    entries = [catalog_entry(s) for s in found]
    if not entries:
        print(f"empty catalog: no period-{args.period} sequence has C_s(1..{args.zone}) = 0", file=sys.stderr)
    if args.json:
        summary = ZczSummary(period=args.period, zone=args.zone, count=len(entries), entries=entries)
        _emit(summary.model_dump_json(indent=2), args.out)
    elif entries or args.out:
        _emit(render_catalog(entries), args.out)
    return EXIT_OK


def cmd_search_hadamard(args: argparse.Namespace) -> int:
    found = hadamard_search(args.order, args.workers, cross_check=args.cross_check)
    entries = [catalog_entry(s, with_hadamard=True) for s in found]
    if not entries:
        print(f"empty catalog: no circulant Hadamard matrix of order {args.order} exists", file=sys.stderr)
    if args.json:
        _emit(render_catalog_json(entries), args.out)
    elif entries or args.out:
        _emit(render_catalog(entries), args.out)
    return EXIT_OK


def _parse_set(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InvalidInput(f"set must be comma-separated integers, got {text!r}") from None


def cmd_diffset(args: argparse.Namespace) -> int:
    spec = DiffSetSpec.of(args.order, _parse_set(args.set), args.lam)
    verdict = verify_difference_set(spec)
    if verdict.valid:
        print(f"valid {spec} difference set; constant C = {verdict.expected_correlation}")
    else:
        g, count = verdict.first_bad_difference
        print(f"not a {spec} difference set: difference {g} occurs {count} times")
    if verdict.degenerate:
        print(f"degenerate: k = {spec.k}, the difference condition holds vacuously")
    if verdict.run_conditions is None:
        print("run conditions: not applicable (constant sequence)")
    else:
        print(f"run conditions: {'satisfied' if verdict.run_conditions else 'not satisfied'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="runcorr",
                                     description="Periodic autocorrelation of binary sequences from their runs")
    parser.add_argument("--workers", type=int, default=None,
                        help="Worker processes (default: RUNCORR_THREADS or the CPU count)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_analyze = sub.add_parser("analyze", help="Run structure and autocorrelation report")
    p_analyze.add_argument("sequence", nargs="?", help='Bitstring such as "1110" or run word such as "1:3,1"')
    p_analyze.add_argument("--file", help="File with one literal per line ('#' starts a comment)")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.add_argument("--out")
    p_analyze.add_argument("--max-pattern-runs", type=int, default=DEFAULT_PATTERN_RUNS)
    p_analyze.set_defaults(handler=cmd_analyze)

    p_verify = sub.add_parser("verify", help="Check the run formula against the brute-force oracle")
    p_verify.add_argument("--period", type=int, required=True)
    mode = p_verify.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-period", type=int)
    p_verify.add_argument("--recurrence-depth", type=int, default=DEFAULT_RECURRENCE_DEPTH)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(handler=cmd_verify)

    p_comp = sub.add_parser("compositions", help="List P(n), optionally with dual sets")
    p_comp.add_argument("n", type=int)
    p_comp.add_argument("--duals", type=int, nargs="?", const=0, default=None, metavar="t")
    p_comp.set_defaults(handler=cmd_compositions)

    p_zcz = sub.add_parser("enumerate-zcz", help="Rotation classes with C_s(1..D) = 0")
    p_zcz.add_argument("--period", type=int, required=True)
    p_zcz.add_argument("--zone", type=int, required=True)
    p_zcz.add_argument("--json", action="store_true")
    p_zcz.add_argument("--out")
    p_zcz.set_defaults(handler=cmd_enumerate_zcz)

    p_had = sub.add_parser("search-hadamard", help="Circulant Hadamard matrices of a given order")
    p_had.add_argument("--order", type=int, required=True)
    p_had.add_argument("--cross-check", action="store_true",
                       help="Also screen by run structure and compare the two answers")
    p_had.add_argument("--json", action="store_true")
    p_had.add_argument("--out")
    p_had.set_defaults(handler=cmd_search_hadamard)

    p_diff = sub.add_parser("diffset", help="Check a cyclic difference set")
    p_diff.add_argument("--order", type=int, required=True)
    p_diff.add_argument("--set", required=True, help="Comma-separated elements of Z_v")
    p_diff.add_argument("--lambda", dest="lam", type=int)
    p_diff.set_defaults(handler=cmd_diffset)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except RuncorrError as e:
        logger.info(f"{args.cmd} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
