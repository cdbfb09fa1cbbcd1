"""Benchmark harness: sliding-window update cost per window size.

One CSV row per size with the columns in ``COLUMNS``. Everything except
``wall_ns_per_update`` depends only on (size, generator, seed, window).
"""

import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Any

import pandas as pd
from pydantic import BaseModel, Field, field_validator

from ..engine.window import HullWindow
from ..shared.exceptions import HullValidationError
from ..shared.logging_manager import get_logger
from .generators import GENERATORS, generate_points

logger = get_logger(__name__)

COLUMNS = ["n", "total_steps", "steps_per_update", "max_h", "wall_ns_per_update"]
HALF = "half"


class BenchConfig(BaseModel):
    """Validated benchmark parameters.

    ``window`` is a fixed live-point count or ``"half"`` for n // 2.
    """

    sizes: list[int]
    generator: str = "uniform-y"
    seed: int = Field(default=0, ge=0)
    window: int | str = 1024
    jobs: int = Field(default=1, ge=1)
    omit_timing: bool = False

    @field_validator("sizes")
    @classmethod
    def _positive_sizes(cls, sizes: list[int]) -> list[int]:
        if not sizes or min(sizes) < 1:
            raise ValueError("sizes must be positive")
        return sizes

    @field_validator("generator")
    @classmethod
    def _known_generator(cls, name: str) -> str:
        if name not in GENERATORS:
            raise ValueError(f"unknown generator {name!r}")
        return name

    @field_validator("window")
    @classmethod
    def _window_policy(cls, window: int | str) -> int | str:
        if isinstance(window, str):
            if window == HALF:
                return window
            if not window.isdigit():
                raise ValueError(f"window must be a positive integer or {HALF!r}")
            window = int(window)
        if window < 1:
            raise ValueError("window must be positive")
        return window


def window_for(policy: int | str, n: int) -> int:
    if policy == HALF:
        return max(1, n // 2)
    return int(policy)


def bench_size(n: int, generator: str, seed: int, window: int | str) -> dict[str, Any]:
    """Slide a window across ``n`` generated points and measure the updates."""
    points = generate_points(generator, n, seed)
    limit = window_for(window, n)
    hull = HullWindow()
    updates = 0
    max_h = 0

    started = time.perf_counter_ns()
    for p in points:
        hull.push_right(p)
        updates += 1
        if len(hull) > limit:
            hull.pop_left()
            updates += 1
        max_h = max(max_h, hull.hull_size)
    elapsed = time.perf_counter_ns() - started

    total_steps = hull.stats().total_steps
    row = {
        "n": n,
        "total_steps": total_steps,
        "steps_per_update": round(total_steps / updates, 6),
        "max_h": max_h,
        "wall_ns_per_update": elapsed // updates,
    }
    logger.info("Bench row produced", extra={"extra": row})
    return row


def run_bench(config: BenchConfig) -> pd.DataFrame:
    """Run every size, in worker processes when ``config.jobs`` > 1.

    Rows keep the order of ``config.sizes``.
    """
    measure = partial(
        bench_size,
        generator=config.generator,
        seed=config.seed,
        window=config.window,
    )
    if config.jobs > 1 and len(config.sizes) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            rows = list(pool.map(measure, config.sizes))
    else:
        rows = [measure(n) for n in config.sizes]

    frame = pd.DataFrame(rows, columns=COLUMNS)
    if config.omit_timing:
        frame = frame.drop(columns=["wall_ns_per_update"])
    return frame


def write_csv(frame: pd.DataFrame, out: Path | None = None) -> str:
    """Render the rows as CSV, also writing them to ``out`` when given."""
    text = frame.to_csv(index=False, lineterminator="\n")
    if out is not None:
        out.write_text(text)
    return text


def load_config(**values: Any) -> BenchConfig:
    """Build a ``BenchConfig``, reporting bad values as validation errors.

    Raises:
        HullValidationError: If any parameter is out of range
    """
    try:
        return BenchConfig(**values)
    except ValueError as e:
        raise HullValidationError(f"invalid bench parameters: {e}") from e
