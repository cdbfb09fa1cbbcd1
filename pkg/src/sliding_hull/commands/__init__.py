"""Command-line commands: trace replay and the benchmark harness."""

from .bench import BenchConfig, bench_size, run_bench, write_csv
from .generators import GENERATORS, generate_points, mixed_updates, sliding_updates
from .run import CommandOutcome, RunReport, format_json, format_text, run_trace
from .trace import Delete, Hull, Insert, Query, TraceCommand, parse_trace

__all__ = [
    "GENERATORS",
    "BenchConfig",
    "CommandOutcome",
    "Delete",
    "Hull",
    "Insert",
    "Query",
    "RunReport",
    "TraceCommand",
    "bench_size",
    "format_json",
    "format_text",
    "generate_points",
    "mixed_updates",
    "parse_trace",
    "run_bench",
    "run_trace",
    "sliding_updates",
    "write_csv",
]
