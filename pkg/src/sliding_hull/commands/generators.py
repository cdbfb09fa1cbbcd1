"""Seeded point streams and update traces for benchmarks and tests.

Every generator returns points with strictly increasing x, so any prefix
can be fed to ``HullWindow.push_right`` in order.
"""

from collections.abc import Callable, Iterator

import numpy as np

from ..geometry.predicates import Point
from ..shared.exceptions import HullValidationError
from .trace import Delete, Insert, TraceCommand

Y_RANGE = 10**6

Generator = Callable[[np.random.Generator, int], np.ndarray]


def _gaps(rng: np.random.Generator, n: int) -> np.ndarray:
    return np.cumsum(rng.integers(1, 4, size=n))


def uniform_y(rng: np.random.Generator, n: int) -> np.ndarray:
    y = rng.integers(-Y_RANGE, Y_RANGE, size=n, endpoint=True)
    return np.column_stack([np.arange(n), y])


def convex_position(rng: np.random.Generator, n: int) -> np.ndarray:
    """Points on y = x², so every live point is a lower hull vertex."""
    x = _gaps(rng, n)
    return np.column_stack([x, x * x])


def zigzag(rng: np.random.Generator, n: int) -> np.ndarray:
    x = _gaps(rng, n)
    sides = np.where(np.arange(n) % 2 == 0, Y_RANGE, -Y_RANGE)
    noise = rng.integers(-Y_RANGE // 10, Y_RANGE // 10, size=n, endpoint=True)
    return np.column_stack([x, sides + noise])


def random_walk(rng: np.random.Generator, n: int) -> np.ndarray:
    x = _gaps(rng, n)
    y = np.cumsum(rng.integers(-100, 100, size=n, endpoint=True))
    return np.column_stack([x, y])


GENERATORS: dict[str, Generator] = {
    "uniform-y": uniform_y,
    "convex-position": convex_position,
    "zigzag": zigzag,
    "random-walk": random_walk,
}


def generate_points(name: str, n: int, seed: int) -> list[Point]:
    """``n`` points from generator ``name``; identical for identical seeds.

    Raises:
        HullValidationError: If the generator is unknown or n < 1
    """
    if name not in GENERATORS:
        known = ", ".join(sorted(GENERATORS))
        raise HullValidationError(f"unknown generator {name!r} (known: {known})")
    if n < 1:
        raise HullValidationError(f"need at least one point, got n={n}")
    rng = np.random.default_rng(seed)
    # tolist() yields Python ints
    return [Point(x, y) for x, y in GENERATORS[name](rng, n).tolist()]


def sliding_updates(points: list[Point], window: int) -> Iterator[TraceCommand]:
    """Insert every point, deleting the oldest once more than ``window`` are live."""
    if window < 1:
        raise HullValidationError(f"window must be positive, got {window}")
    live = 0
    for p in points:
        yield Insert(p.x, p.y)
        live += 1
        if live > window:
            yield Delete()
            live -= 1


def mixed_updates(
    points: list[Point], seed: int, pop_rate: float = 0.4
) -> Iterator[TraceCommand]:
    """Insert every point with random runs of deletions in between.

    The window may drain completely, which exercises the restart path.
    """
    rng = np.random.default_rng(seed)
    live = 0
    for p in points:
        yield Insert(p.x, p.y)
        live += 1
        while live and rng.random() < pop_rate:
            yield Delete()
            live -= 1
