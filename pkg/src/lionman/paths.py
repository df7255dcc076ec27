"""Seeded recorded-path generators for the continuum spaces.

Everything here is deterministic given a seed: the acceptance corpus, CLI
scenarios and demos all build their pursuer paths through these functions.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.interpolate import CubicSpline

from .core import FuncPath, RecordedPath, SampledPath, ScenarioError
from .disk import TWO_PI

__all__ = [
    "constant_path",
    "segment_path",
    "spiral_path",
    "spline_path",
    "origin_crossing_path",
    "random_disk_path",
    "random_man_disk_path",
    "random_edge_path",
    "random_square_path",
    "random_circle_path",
    "disk_corpus",
]


def constant_path(p: complex) -> RecordedPath:
    return FuncPath(lambda t: p)


def segment_path(space, a: complex, b: complex, t0: float = 0.0, t1: float = 1.0) -> RecordedPath:
    """Straight move from a (before t0) to b (after t1)."""
    if not t1 > t0:
        raise ScenarioError("segment_path needs t1 > t0")

    def at(t: float):
        u = min(max((t - t0) / (t1 - t0), 0.0), 1.0)
        return space.interpolate(a, b, u)

    return FuncPath(at)


def spiral_path(
    turns: float,
    reach_time: float = 1.0,
    start_angle: float = 0.0,
    hold: bool = True,
) -> RecordedPath:
    """Spiral from the center, reaching the boundary exactly at ``reach_time``.

    rho grows linearly to exactly 1.0 (and stays there when ``hold``); the
    angle advances ``turns`` full turns per unit time.
    """

    def at(t: float):
        u = t / reach_time
        rho = min(u, 1.0) if hold else max(0.0, 1.0 - abs(u - 1.0))
        ang = TWO_PI * (start_angle + turns * t)
        return rho * complex(math.cos(ang), math.sin(ang))

    return FuncPath(at)


def spline_path(rng: np.random.Generator, horizon: float, n_knots: int = 8, max_radius: float = 0.95) -> RecordedPath:
    """Smooth random path through uniform control points, scaled into the disk."""
    knots = np.linspace(0.0, horizon, n_knots)
    pts = rng.uniform(-1.0, 1.0, size=(n_knots, 2))
    cs = CubicSpline(knots, pts, axis=0)
    dense = cs(np.linspace(0.0, horizon, 64 * n_knots))
    peak = float(np.max(np.hypot(dense[:, 0], dense[:, 1])))
    scale = max_radius / peak if peak > max_radius else 1.0

    def at(t: float):
        u = min(max(t, 0.0), horizon)
        x, y = cs(u) * scale
        return complex(float(x), float(y))

    return FuncPath(at)


def origin_crossing_path(rng: np.random.Generator, horizon: float) -> RecordedPath:
    """Path that passes exactly through the origin at integer times.

    rho = |sin(pi t)| * envelope, so every integer instant on the grid is an
    exact zero (closing the lift component); the angle keeps winding.
    """
    turns = float(rng.uniform(-2.0, 2.0))
    start = float(rng.uniform(0.0, 1.0))
    amp = float(rng.uniform(0.5, 1.0))

    def at(t: float):
        rho = amp * abs(math.sin(math.pi * t))
        ang = TWO_PI * (start + turns * t)
        return rho * complex(math.cos(ang), math.sin(ang))

    return FuncPath(at)


def random_disk_path(seed: int, horizon: float) -> RecordedPath:
    """Corpus mixture: splines, boundary-reaching spirals, origin-crossings."""
    rng = np.random.default_rng(seed)
    kind = seed % 3
    if kind == 0:
        return spline_path(rng, horizon)
    if kind == 1:
        turns = float(rng.uniform(-3.0, 3.0))
        reach = float(rng.uniform(0.5, 0.9)) * horizon
        return spiral_path(turns, reach_time=reach, start_angle=float(rng.uniform(0, 1)))
    return origin_crossing_path(rng, horizon)


def disk_corpus(n: int, horizon: float, seed0: int = 0):
    """The standard n-path seeded pursuer corpus in the disk."""
    return [random_disk_path(seed0 + i, horizon) for i in range(n)]


def random_man_disk_path(seed: int, horizon: float, n_knots: int = 8) -> RecordedPath:
    """Evader-style spline: starts well away from the center, keeps moving."""
    rng = np.random.default_rng((seed, 77))
    knots = np.linspace(0.0, horizon, n_knots)
    pts = rng.uniform(-1.0, 1.0, size=(n_knots, 2))
    r0 = math.hypot(*pts[0])
    want = float(rng.uniform(0.4, 0.9))
    if r0 > 1e-6:
        pts[0] *= want / r0
    else:
        pts[0] = [want, 0.0]
    cs = CubicSpline(knots, pts, axis=0)
    dense = cs(np.linspace(0.0, horizon, 64 * n_knots))
    peak = float(np.max(np.hypot(dense[:, 0], dense[:, 1])))
    scale = 0.95 / peak if peak > 0.95 else 1.0

    def at(t: float):
        u = min(max(t, 0.0), horizon)
        x, y = cs(u) * scale
        return complex(float(x), float(y))

    return FuncPath(at)


def random_edge_path(space, seed: int, horizon: float, n_knots: int = 6) -> RecordedPath:
    """Evader path along the bottom edge of the unit square (y = 0)."""
    rng = np.random.default_rng((seed, 311))
    knots = np.linspace(0.0, horizon, n_knots)
    xs = rng.uniform(0.05, 0.95, size=n_knots)
    cs = CubicSpline(knots, xs)

    def at(t: float):
        u = min(max(t, 0.0), horizon)
        return complex(min(max(float(cs(u)), 0.0), 1.0), 0.0)

    return FuncPath(at)


def random_square_path(space, seed: int, horizon: float, n_knots: int = 6) -> RecordedPath:
    """Smooth random path inside the unit square (componentwise spline, clipped)."""
    rng = np.random.default_rng(seed)
    knots = np.linspace(0.0, horizon, n_knots)
    pts = rng.uniform(0.05, 0.95, size=(n_knots, 2))
    cs = CubicSpline(knots, pts, axis=0)

    def at(t: float):
        u = min(max(t, 0.0), horizon)
        x, y = cs(u)
        return complex(min(max(float(x), 0.0), 1.0), min(max(float(y), 0.0), 1.0))

    return FuncPath(at)


def random_circle_path(seed: int, horizon: float) -> RecordedPath:
    """Smooth random angular motion on the circle."""
    rng = np.random.default_rng(seed)
    start = float(rng.uniform(0.0, 1.0))
    coeffs = rng.normal(0.0, 0.5, size=3)

    def at(t: float):
        ang = TWO_PI * (
            start + coeffs[0] * t + 0.2 * coeffs[1] * math.sin(TWO_PI * t / max(horizon, 1e-9))
            + 0.1 * coeffs[2] * t * t / max(horizon, 1e-9)
        )
        return complex(math.cos(ang), math.sin(ang))

    return FuncPath(at)


def sampled_on_grid(space, path: RecordedPath, grid) -> SampledPath:
    """Freeze a path into its grid samples (linear interpolation thereafter)."""
    ts = list(grid.times)
    return SampledPath(space, ts, [path.at(t) for t in ts])
