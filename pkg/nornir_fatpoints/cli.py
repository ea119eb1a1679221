"""Command line entry point: `fatpoints`."""

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence

from pydantic import ValidationError

from nornir_fatpoints import __version__
from nornir_fatpoints.betti import BettiReport, VerificationSummary, analyse, verify_expected
from nornir_fatpoints.config import OutputFormat, RunConfig
from nornir_fatpoints.exceptions import FatPointException, SchemeError
from nornir_fatpoints.ledger.axioms import axiom_table
from nornir_fatpoints.ledger.replay import FIRST_ROUTED_DEGREE, base_cases, cover, replay
from nornir_fatpoints.ledger.types import Certificate
from nornir_fatpoints.numerics import HF_EXCEPTIONS, RESOLUTION_EXCEPTIONS
from nornir_fatpoints.runner import SWEEP_COLUMNS, hilbert_rows, ledger_sweeps, numeric_sweep, sweep_specs
from nornir_fatpoints.schemes import loads
from nornir_fatpoints.utils.helpers import make_folder, parse_seeds

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

HILBERT_COLUMNS = ("seed", "k", "computed", "expected", "maximal")
REPORT_COLUMNS = (
    "seed",
    "degenerate",
    "hf_maximal",
    "generators",
    "syzygies",
    "expected",
    "matches_expected",
    "identity_holds",
    "euler_holds",
    "error",
)
STEP_COLUMNS = ("rule", "k_before", "k_after", "length_before", "length_after", "parameters", "after")
LEDGER_SWEEP_COLUMNS = ("s", "d", "t", "p", "k", "certified", "terminal", "steps", "error")
BASE_CASE_COLUMNS = ("name", "k", "certified", "terminal", "values", "error")
COVER_COLUMNS = ("side", "k", "s", "d", "t", "p", "terminal", "steps")


class UsageError(FatPointException):
    """Bad arguments that argparse cannot catch on its own."""


def _graded(counts: Dict[int, int]) -> str:
    """Degree-keyed counts as `degree:count` pairs separated by spaces."""
    return " ".join(f"{degree}:{count}" for degree, count in sorted(counts.items()))


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, dict):
        return " ".join(f"{key}={item}" for key, item in value.items())
    return value


def _table(columns: Sequence[str], rows: Iterable[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def _emit(config: RunConfig, key: str, payload: Any, columns: Sequence[str], rows: List[Dict[str, Any]]) -> None:
    """Write one structured document or one comma separated table to --out or stdout."""
    if config.output_format == OutputFormat.STRUCTURED:
        text = json.dumps({"config": config.summary(), key: payload}, indent=2, default=str) + "\n"
    else:
        text = _table(columns, rows)
    if config.out:
        make_folder(os.path.dirname(os.path.abspath(config.out)))
        with open(config.out, "w", encoding="utf8") as filehandler:
            filehandler.write(text)
        LOGGER.info("Wrote %s", config.out)
    else:
        sys.stdout.write(text)


def _report_row(report: BettiReport) -> Dict[str, Any]:
    return {
        "seed": report.seed,
        "degenerate": report.degenerate,
        "hf_maximal": report.hf_maximal,
        "generators": _graded(report.generators),
        "syzygies": _graded(report.syzygies),
        "expected": _graded(report.expected),
        "matches_expected": report.matches_expected,
        "identity_holds": report.identity_holds,
        "euler_holds": report.euler_holds,
        "error": report.error,
    }


def _summary_payload(summary: VerificationSummary) -> Dict[str, Any]:
    payload = summary.dict()
    payload["as_expected"] = summary.as_expected
    return payload


def _certificate_rows(certificate: Certificate) -> List[Dict[str, Any]]:
    rows = [step.to_dict() for step in certificate.steps]
    final = certificate.final
    rows.append({"rule": "axiom", "k_before": final.k, "k_after": final.k, "after": certificate.terminal})
    return rows


def _counts(args) -> tuple:
    counts = (args.a, args.b, args.c)
    if min(counts) < 0:
        raise UsageError(f"point counts must be nonnegative, got {counts}")
    return counts


def _check_degree(k: int) -> None:
    if k < FIRST_ROUTED_DEGREE:
        raise UsageError(f"ledger replays start at degree {FIRST_ROUTED_DEGREE}, got {k}")


def cmd_hilbert(args, config: RunConfig) -> int:
    """Hilbert function per seed against the maximal one."""
    a, b, c = _counts(args)
    if args.k_max < 0:
        raise UsageError(f"--k-max must be nonnegative, got {args.k_max}")
    rows = hilbert_rows(a, b, c, config.seed_list, args.k_max, config.prime, config.jobs)
    _emit(config, "rows", rows, HILBERT_COLUMNS, rows)
    if (a, b, c) in HF_EXCEPTIONS:
        return EXIT_OK
    return EXIT_OK if all(row["maximal"] for row in rows) else EXIT_MISMATCH


def cmd_betti(args, config: RunConfig) -> int:
    """Betti numbers per seed with the majority verdict."""
    a, b, c = _counts(args)
    summary = verify_expected(a, b, c, config.seed_list, config.prime, config.jobs)
    rows = [_report_row(report) for report in summary.reports]
    rows.append(
        {
            "seed": "majority",
            "generators": _graded(summary.majority_generators or {}),
            "expected": _graded(summary.expected),
            "matches_expected": summary.majority_matches,
        }
    )
    _emit(config, "report", _summary_payload(summary), REPORT_COLUMNS, rows)
    return EXIT_OK if summary.as_expected else EXIT_MISMATCH


def cmd_sweep(args, config: RunConfig) -> int:
    """Majority Betti verdicts over a box of (a, b, c)."""
    limits = (args.a_max, args.b_max, args.c_max, args.length_max)
    if min(limits) < 0:
        raise UsageError(f"sweep limits must be nonnegative, got {limits}")
    specs = sweep_specs(*limits)
    sweep_rows = numeric_sweep(specs, config.seed_list, config.prime, config.jobs) if specs else []
    rows = [row.to_dict() for row in sweep_rows]
    _emit(config, "rows", rows, SWEEP_COLUMNS, rows)
    return EXIT_OK if all(row.as_expected for row in sweep_rows) else EXIT_MISMATCH


def cmd_scheme(args, config: RunConfig) -> int:
    """Betti numbers of a scheme read from a file of `m:x:y` lines."""
    try:
        with open(args.file, encoding="utf8") as filehandler:
            text = filehandler.read()
    except OSError as error:
        raise UsageError(f"cannot read {args.file}: {error.strerror}") from None
    scheme = loads(text, config.prime)
    report = analyse(scheme)
    _emit(config, "report", report.dict(), REPORT_COLUMNS, [_report_row(report)])
    exception = tuple(scheme.spec.counts) in RESOLUTION_EXCEPTIONS
    return EXIT_OK if report.matches_expected != exception else EXIT_MISMATCH


def cmd_ledger_replay(args, config: RunConfig) -> int:
    """Certificate of one admissible tuple."""
    _check_degree(args.k)
    certificate = replay(args.s, args.d, args.t, args.p, args.k)
    _emit(config, "certificate", certificate.to_dict(), STEP_COLUMNS, _certificate_rows(certificate))
    return EXIT_OK


def cmd_ledger_sweep(args, config: RunConfig) -> int:
    """Replay every admissible tuple for each degree in k..k_max."""
    _check_degree(args.k)
    k_max = args.k if args.k_max is None else args.k_max
    if k_max < args.k:
        raise UsageError(f"--k-max {k_max} is below k={args.k}")
    rows = [row.to_dict() for row in ledger_sweeps(range(args.k, k_max + 1), config.jobs)]
    _emit(config, "rows", rows, LEDGER_SWEEP_COLUMNS, rows)
    return EXIT_OK if all(row["certified"] for row in rows) else EXIT_MISMATCH


def cmd_ledger_axioms(args, config: RunConfig) -> int:  # pylint: disable=unused-argument
    """The terminal table."""
    rows = [{"axiom_id": axiom.axiom_id, "citation": axiom.citation} for axiom in axiom_table()]
    _emit(config, "rows", rows, ("axiom_id", "citation"), rows)
    return EXIT_OK


def cmd_ledger_base_cases(args, config: RunConfig) -> int:  # pylint: disable=unused-argument
    """Replay of every initial configuration."""
    rows = [case.to_dict() for case in base_cases()]
    _emit(config, "rows", rows, BASE_CASE_COLUMNS, rows)
    return EXIT_OK if all(row["certified"] for row in rows) else EXIT_MISMATCH


def cmd_ledger_cover(args, config: RunConfig) -> int:
    """Injectivity and surjectivity certificates around the surjectivity degree of (a, b, c)."""
    a, b, c = _counts(args)
    verdict = cover(a, b, c)
    rows = []
    for side, point_tuple, k, certificate in (
        ("injective", verdict.subtuple, verdict.w - 1, verdict.injective),
        ("surjective", verdict.supertuple, verdict.w, verdict.surjective),
    ):
        row = {"side": side, "k": k, **point_tuple._asdict()}
        row.update(terminal=certificate.terminal, steps=len(certificate.steps))
        rows.append(row)
    _emit(config, "certificate", verdict.to_dict(), COVER_COLUMNS, rows)
    return EXIT_OK


def _add_counts(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("a", type=int, help="simple points")
    parser.add_argument("b", type=int, help="double points")
    parser.add_argument("c", type=int, help="triple points")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with every subcommand."""
    parser = argparse.ArgumentParser(prog="fatpoints", description="Fat point resolutions and ledger replays.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--prime", type=int, help="field characteristic, a prime between 3 and 2^31")
    parser.add_argument("--seeds", help="comma separated seeds, e.g. 1,2,3")
    parser.add_argument("--jobs", type=int, help="worker threads")
    parser.add_argument("--format", dest="output_format", choices=[item.value for item in OutputFormat])
    parser.add_argument("--out", help="write the output to this file")
    parser.add_argument("--debug", action="store_true", default=None, help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    hilbert = commands.add_parser("hilbert", help="Hilbert function against the maximal one")
    _add_counts(hilbert)
    hilbert.add_argument("--k-max", type=int, required=True)
    hilbert.set_defaults(handler=cmd_hilbert)

    betti = commands.add_parser("betti", help="graded Betti numbers against the expected resolution")
    _add_counts(betti)
    betti.set_defaults(handler=cmd_betti)

    sweep = commands.add_parser("sweep", help="Betti verdicts over a box of (a, b, c)")
    sweep.add_argument("--a-max", type=int, required=True)
    sweep.add_argument("--b-max", type=int, required=True)
    sweep.add_argument("--c-max", type=int, required=True)
    sweep.add_argument("--length-max", type=int, required=True)
    sweep.set_defaults(handler=cmd_sweep)

    scheme = commands.add_parser("scheme", help="Betti numbers of a scheme file of m:x:y lines")
    scheme.add_argument("file")
    scheme.set_defaults(handler=cmd_scheme)

    ledger = commands.add_parser("ledger", help="replay the induction ledger")
    ledger_commands = ledger.add_subparsers(dest="ledger_command", required=True)
    ledger_replay = ledger_commands.add_parser("replay", help="certificate for Z(s, d, t, p) at degree k")
    for name in ("s", "d", "t", "p", "k"):
        ledger_replay.add_argument(name, type=int)
    ledger_replay.set_defaults(handler=cmd_ledger_replay)
    ledger_sweep = ledger_commands.add_parser("sweep", help="replay every admissible tuple")
    ledger_sweep.add_argument("k", type=int)
    ledger_sweep.add_argument("--k-max", type=int)
    ledger_sweep.set_defaults(handler=cmd_ledger_sweep)
    ledger_axioms = ledger_commands.add_parser("axioms", help="list the terminals")
    ledger_axioms.set_defaults(handler=cmd_ledger_axioms)
    ledger_base = ledger_commands.add_parser("base-cases", help="replay the initial configurations")
    ledger_base.set_defaults(handler=cmd_ledger_base_cases)
    ledger_cover = ledger_commands.add_parser("cover", help="injectivity and surjectivity around w")
    _add_counts(ledger_cover)
    ledger_cover.set_defaults(handler=cmd_ledger_cover)
    return parser


def load_config(args) -> RunConfig:
    """RunConfig from the flags that were given, the environment filling the rest."""
    values: Dict[str, Any] = {}
    for name in ("prime", "jobs", "output_format", "out", "debug"):
        if getattr(args, name) is not None:
            values[name] = getattr(args, name)
    if args.seeds is not None:
        values["seeds"] = parse_seeds(args.seeds)
    return RunConfig(**values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code == 0 else EXIT_USAGE

    try:
        config = load_config(args)
    except (ValidationError, SchemeError) as error:
        sys.stderr.write(f"fatpoints: invalid settings: {error}\n")
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if config.debug else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s | %(message)s",
    )
    LOGGER.debug("config | %s", config.summary())

    try:
        return args.handler(args, config)
    except (UsageError, SchemeError) as error:
        sys.stderr.write(f"fatpoints: {error}\n")
        return EXIT_USAGE
    except FatPointException as error:
        LOGGER.error("%s | %s", args.command, error)
        sys.stderr.write(f"fatpoints: {error}\n")
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
