"""Command-line entry point for sliding hull.

Subcommands:
- run: replay a trace file, optionally checking every step
- bench: measure update cost over generated sliding-window traces

Exit codes: 0 success, 1 verify mismatch or internal error, 2 usage or
parse error.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from .commands.bench import load_config, run_bench, write_csv
from .commands.generators import GENERATORS
from .commands.run import format_json, format_text, run_trace
from .commands.trace import parse_trace
from .shared.config_manager import ConfigManager
from .shared.exceptions import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    HullCommandError,
    handle_hull_exceptions,
)
from .shared.logging_manager import configure_logging, get_logger
from .shared.utils import parse_int_list

logger = get_logger(__name__)


def build_parser(config: ConfigManager) -> argparse.ArgumentParser:
    """Build the argument parser with defaults taken from configuration.

    Args:
        config: Source of the run.* and bench.* defaults
    """
    parser = argparse.ArgumentParser(
        prog="sliding-hull",
        description="Convex hull of a sliding window of points",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Replay a trace and cross-check every step against brute force
  sliding-hull run trace.txt --verify --stats

  # Benchmark three window sizes with a fixed seed, without timing
  sliding-hull bench --sizes 1e4,1e5,1e6 --gen uniform-y --seed 7 --omit-timing

Environment Variables:
  SLIDING_HULL_LOGGING_ENABLED   Emit JSON logs on stderr (default: false)
  SLIDING_HULL_LOGGING_LEVEL     Log level (default: INFO)
  SLIDING_HULL_BENCH_WINDOW      Default bench window (default: 1024)
  SLIDING_HULL_RUN_FORMAT        Default run output format (default: text)
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Replay a trace file")
    run.add_argument("file", type=Path, help="Trace file, or - for stdin")
    run.add_argument(
        "--verify",
        action="store_true",
        help="Compare hull and answers with brute force after every step",
    )
    run.add_argument("--stats", action="store_true", help="Print procedure counters")
    run.add_argument(
        "--format",
        choices=["text", "json"],
        default=config.get("run", "format", "text"),
        help="Report format (default: text or SLIDING_HULL_RUN_FORMAT)",
    )
    run.add_argument("--timing", action="store_true", help="Include wall-clock time")

    bench = sub.add_parser("bench", help="Benchmark sliding-window updates")
    bench.add_argument(
        "--sizes",
        type=parse_int_list,
        required=True,
        help="Comma separated point counts, e.g. 1e4,1e5",
    )
    bench.add_argument(
        "--gen",
        choices=sorted(GENERATORS),
        default=config.get("bench", "generator", "uniform-y"),
        help="Point generator",
    )
    bench.add_argument("--seed", type=int, default=config.get_int("bench", "seed", 0))
    bench.add_argument(
        "--window",
        default=str(config.get("bench", "window", 1024)),
        help="Live points kept, or 'half' for n // 2 (default: 1024)",
    )
    bench.add_argument(
        "--jobs",
        type=int,
        default=config.get_int("bench", "jobs", 1),
        help="Worker processes, one size per worker",
    )
    bench.add_argument("--out", type=Path, help="Also write the CSV here")
    bench.add_argument(
        "--omit-timing",
        action="store_true",
        help="Drop wall_ns_per_update so output is byte-identical across runs",
    )
    return parser


@handle_hull_exceptions(default_message="Trace run failed")
def run_command(args: argparse.Namespace) -> int:
    """Replay a trace file and print its report.

    Returns:
        EXIT_MISMATCH if any check failed, else EXIT_OK
    """
    text = sys.stdin.read() if str(args.file) == "-" else args.file.read_text()
    report = run_trace(parse_trace(text), verify=args.verify)
    render = format_json if args.format == "json" else format_text
    sys.stdout.write(render(report, stats=args.stats, timing=args.timing))
    return EXIT_OK if report.ok else EXIT_MISMATCH


@handle_hull_exceptions(default_message="Benchmark failed")
def bench_command(args: argparse.Namespace) -> int:
    """Run the benchmark and print CSV rows."""
    config = load_config(
        sizes=args.sizes,
        generator=args.gen,
        seed=args.seed,
        window=args.window,
        jobs=args.jobs,
        omit_timing=args.omit_timing,
    )
    sys.stdout.write(write_csv(run_bench(config), args.out))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    try:
        config = ConfigManager()
        configure_logging(config)
        logger.debug(
            "Effective configuration", extra={"extra": config.get_all_config()}
        )
        parser = build_parser(config)
    except Exception as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    command = run_command if args.command == "run" else bench_command
    try:
        return command(args)
    except HullCommandError as e:
        logger.error("Command failed", extra={"extra": {"command": args.command}})
        print(e, file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
