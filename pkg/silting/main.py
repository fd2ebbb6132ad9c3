"""
Command-line entry point

    python -m silting algebra FILE.quiver
    python -m silting silting FILE.quiver FILE.complex
    python -m silting examples [FILTER]

Exit status: 0 when every check passes, 1 when a check fails or a computation
cannot be completed, 2 on unreadable or malformed input.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from silting import __version__
from silting.core.config import settings
from silting.core.exceptions import QuiverSyntaxError, SiltingError
from silting.schemas.report import ExamplesReport, Report
from silting.services.reports import build_report, render_text, run_fixture
from silting.services.worked_examples import select_fixtures

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _seed(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed '{text}', use a decimal or 0x-prefixed integer")


def _options(defaults: bool) -> argparse.ArgumentParser:
    """Flags accepted before or after the subcommand; only the top level carries defaults."""
    unset = argparse.SUPPRESS

    def default(value):
        return value if defaults else unset

    options = argparse.ArgumentParser(add_help=False)
    options.add_argument(
        "--cap", type=int, default=default(None), help=f"resolution cap (default {settings.RESOLUTION_CAP})"
    )
    options.add_argument(
        "--length-cap", type=int, default=default(None), help=f"path length cap (default {settings.LENGTH_CAP})"
    )
    options.add_argument(
        "--seed", type=_seed, default=default(None), help=f"isomorphism search seed (default {settings.ISO_SEED:#x})"
    )
    options.add_argument("--json", action="store_true", default=default(False), help="print the machine-readable report")
    options.add_argument(
        "--no-timing", action="store_true", default=default(False), help="omit elapsed_ms for reproducible output"
    )
    options.add_argument("--log-level", default=default(None), help=f"logging level (default {settings.LOG_LEVEL})")
    return options


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="silting",
        description="Exact computations with two-term silting complexes over bound quiver algebras.",
        parents=[_options(defaults=True)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    shared = [_options(defaults=False)]
    commands = parser.add_subparsers(dest="command", required=True)
    algebra = commands.add_parser("algebra", parents=shared, help="dimension and global dimension of kQ/I")
    algebra.add_argument("quiver", type=Path)
    silting = commands.add_parser("silting", parents=shared, help="analyze a two-term complex over kQ/I")
    silting.add_argument("quiver", type=Path)
    silting.add_argument("complex", type=Path)
    examples = commands.add_parser("examples", parents=shared, help="run the bundled worked examples")
    examples.add_argument(
        "filter",
        nargs="?",
        default=None,
        help="substring of the fixture names, or a family member such as ex1:n=3 or a:n=2",
    )
    return parser


def _read(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def _emit(report: Report, as_json: bool):
    if as_json:
        print(report.model_dump_json(indent=2))
    else:
        print(render_text(report))


def _run(args: argparse.Namespace) -> int:
    timing = not args.no_timing and settings.REPORT_TIMING
    options = dict(cap=args.cap, length_cap=args.length_cap, seed=args.seed, timing=timing)
    if args.command == "algebra":
        report = build_report(_read(args.quiver), **options)
        _emit(report, args.json)
        return EXIT_OK if report.passed else EXIT_FAILED
    if args.command == "silting":
        report = build_report(_read(args.quiver), _read(args.complex), **options)
        _emit(report, args.json)
        return EXIT_OK if report.passed else EXIT_FAILED

    fixtures = select_fixtures(args.filter)
    if not fixtures:
        print(f"No fixture matches '{args.filter}'", file=sys.stderr)
        return EXIT_INPUT
    reports: List[Report] = [run_fixture(fixture, **options) for fixture in fixtures]
    passed = all(report.passed for report in reports)
    if args.json:
        summary = ExamplesReport(schema_version=settings.REPORT_SCHEMA_VERSION, reports=reports, passed=passed)
        print(summary.model_dump_json(indent=2))
    else:
        print("\n\n".join(render_text(report) for report in reports))
        print(f"\n{sum(report.passed for report in reports)}/{len(reports)} fixtures passed")
    return EXIT_OK if passed else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = _parser().parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return _run(args)
    except QuiverSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SiltingError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
