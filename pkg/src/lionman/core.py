"""Match engine: time grids, causal histories, match execution and checks.

A match runs two players on a shared time grid. Each player is either a
recorded path (a function of time) or an online strategy that maps the
opponent's visible sample history to its own next position. Two evaluation
modes exist:

* ``strict``  - a player's position at step j is computed from opponent
  samples at steps < j. Mandatory when both players are strategies.
* ``closed``  - the recorded opponent's sample at step j is visible when the
  strategy computes step j. This is the faithful offline semantics for
  continuous opponents (the current sample is the limit of the history).
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

__all__ = [
    "EngineError",
    "ScenarioError",
    "TimeGrid",
    "History",
    "RecordedPath",
    "SampledPath",
    "FuncPath",
    "CapturePredicate",
    "Trace",
    "run_match",
    "NoLookaheadReport",
    "check_no_lookahead",
    "Retraction",
    "identity_retraction",
    "compose_retractions",
    "lift_man_strategy",
    "project_lion_strategy",
    "trace_to_jsonl",
]

TIME_TOL = 1e-12


class EngineError(Exception):
    """A runtime contract violation during match execution."""


class ScenarioError(Exception):
    """Invalid configuration: bad grid, bad player spec, malformed input."""


# ---------------------------------------------------------------------------
# Time grid


@dataclass(frozen=True)
class TimeGrid:
    """Discretized timeline: uniform steps of ``dt`` over [0, horizon].

    ``event_times`` are extra sample instants (e.g. a strategy's trigger
    schedule) merged into the grid so they are sampled exactly. Sample times
    are strictly increasing and duplicates within 1e-12 collapse onto the
    uniform grid value.
    """

    dt: float
    horizon: float
    event_times: tuple[float, ...] = ()
    times: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not (self.dt > 0.0) or not math.isfinite(self.dt):
            raise ScenarioError(f"dt must be positive, got {self.dt}")
        if not (self.horizon > 0.0) or not math.isfinite(self.horizon):
            raise ScenarioError(f"horizon must be positive, got {self.horizon}")
        # +1e-9 fuzz: 5/0.001 is 4999.999... in floats, the last sample must survive
        steps = int(math.floor(self.horizon / self.dt + 1e-9)) + 1
        base = [j * self.dt for j in range(steps)]
        merged = list(base)
        for e in sorted(set(self.event_times)):
            if not math.isfinite(e):
                raise ScenarioError(f"non-finite event time {e}")
            if e < -TIME_TOL or e > base[-1] + TIME_TOL:
                continue
            i = bisect_left(merged, e)
            near_prev = i > 0 and abs(merged[i - 1] - e) <= TIME_TOL
            near_next = i < len(merged) and abs(merged[i] - e) <= TIME_TOL
            if not near_prev and not near_next:
                merged.insert(i, e)
        object.__setattr__(self, "times", tuple(merged))

    @property
    def steps(self) -> int:
        """Uniform step count floor(horizon/dt)+1 (event times excluded)."""
        return int(math.floor(self.horizon / self.dt + 1e-9)) + 1

    def __len__(self) -> int:
        return len(self.times)

    def index_of(self, t: float) -> int:
        """Index of the sample at time t (within 1e-12); raises if absent."""
        i = bisect_left(self.times, t - TIME_TOL)
        if i < len(self.times) and abs(self.times[i] - t) <= TIME_TOL:
            return i
        raise ScenarioError(f"time {t} is not a grid sample")

    def has_time(self, t: float) -> bool:
        try:
            self.index_of(t)
            return True
        except ScenarioError:
            return False


# ---------------------------------------------------------------------------
# Histories and recorded paths


class History:
    """Read-only view of the opponent samples visible at the current step.

    The engine controls the visible length; strategies can only reach samples
    inside the window. ``interpolated`` clamps outside the window to the
    nearest endpoint (this is the documented strict-mode lag).
    """

    __slots__ = ("space", "_times", "_points", "_n")

    def __init__(self, space, times: Sequence[float], points: Sequence, n: int):
        self.space = space
        self._times = times
        self._points = points
        self._n = n

    def __len__(self) -> int:
        return self._n

    def time(self, i: int) -> float:
        if not 0 <= i < self._n:
            raise IndexError(i)
        return self._times[i]

    def position(self, i: int):
        if not 0 <= i < self._n:
            raise IndexError(i)
        return self._points[i]

    def latest(self):
        """Last visible (t, position), or None if the window is empty."""
        if self._n == 0:
            return None
        return self._times[self._n - 1], self.position(self._n - 1)

    def latest_at_or_before(self, t: float):
        i = bisect_right(self._times, t + TIME_TOL, 0, self._n) - 1
        if i < 0:
            return None
        return self._times[i], self.position(i)

    def latest_strictly_before(self, t: float):
        i = bisect_left(self._times, t - TIME_TOL, 0, self._n) - 1
        if i < 0:
            return None
        return self._times[i], self.position(i)

    def sample_at(self, t: float):
        """Exact sample at time t, or None if t is not a visible sample."""
        i = bisect_left(self._times, t - TIME_TOL, 0, self._n)
        if i < self._n and abs(self._times[i] - t) <= TIME_TOL:
            return self.position(i)
        return None

    def interpolated(self, t: float):
        """Space interpolation between bracketing samples; clamps at window ends."""
        if self._n == 0:
            raise EngineError("interpolated() on an empty history")
        i = bisect_left(self._times, t - TIME_TOL, 0, self._n)
        if i < self._n and abs(self._times[i] - t) <= TIME_TOL:
            return self.position(i)
        if i == 0:
            return self.position(0)
        if i >= self._n:
            return self.position(self._n - 1)
        t0, t1 = self._times[i - 1], self._times[i]
        frac = (t - t0) / (t1 - t0)
        return self.space.interpolate(self.position(i - 1), self.position(i), frac)


class MappedHistory(History):
    """History with positions pushed through a map (used by retraction combinators)."""

    __slots__ = ("_map",)

    def __init__(self, space, base: History, map_fn):
        super().__init__(space, base._times, base._points, len(base))
        self._map = map_fn

    def position(self, i: int):
        return self._map(super().position(i))


class RecordedPath:
    """A pre-recorded path: a total function of time into the space."""

    def at(self, t: float):
        raise NotImplementedError

    @property
    def start(self):
        return self.at(0.0)


class SampledPath(RecordedPath):
    """Recorded path given by samples, space-interpolated between them.

    Outside [times[0], times[-1]] the path clamps to the nearest endpoint.
    """

    def __init__(self, space, times: Sequence[float], points: Sequence):
        if len(times) != len(points) or len(times) == 0:
            raise ScenarioError("SampledPath needs equally many times and points")
        for a, b in zip(times, times[1:]):
            if not b > a:
                raise ScenarioError("SampledPath times must be strictly increasing")
        self.space = space
        self.times = [float(t) for t in times]
        self.points = list(points)

    def at(self, t: float):
        i = bisect_left(self.times, t - TIME_TOL)
        if i < len(self.times) and abs(self.times[i] - t) <= TIME_TOL:
            return self.points[i]
        if i == 0:
            return self.points[0]
        if i >= len(self.times):
            return self.points[-1]
        t0, t1 = self.times[i - 1], self.times[i]
        frac = (t - t0) / (t1 - t0)
        return self.space.interpolate(self.points[i - 1], self.points[i], frac)


class FuncPath(RecordedPath):
    """Recorded path backed by an explicit function of time."""

    def __init__(self, fn: Callable[[float], object]):
        self.fn = fn

    def at(self, t: float):
        return self.fn(t)


def _is_recorded(player) -> bool:
    return isinstance(player, RecordedPath)


# ---------------------------------------------------------------------------
# Capture predicate and traces


@dataclass(frozen=True)
class CapturePredicate:
    """Capture test: exact point identity (tolerance None) or distance <= tolerance."""

    tolerance: Optional[float] = None

    def holds(self, space, a, b) -> bool:
        if self.tolerance is None:
            return space.points_equal(a, b)
        d = space.distance(a, b)
        if d is None:
            raise EngineError("tolerance capture requires a metric space")
        return d <= self.tolerance

    @staticmethod
    def default_for(space) -> "CapturePredicate":
        # exact identity in finite spaces, 1e-9 in the continuum (spec default)
        return CapturePredicate(1e-9 if space.is_metric else None)


@dataclass
class Trace:
    """Recorded match: sample times and both players' positions.

    ``captured_at`` is the time of the first sample where the capture
    predicate held (samples stop there). ``min_distance`` is the minimum
    pairwise sample distance; None in non-metric spaces.
    """

    space: object
    times: list[float]
    lion: list
    man: list
    dists: Optional[list[float]]
    captured_at: Optional[float] = None

    @property
    def captured(self) -> bool:
        return self.captured_at is not None

    @property
    def min_distance(self) -> Optional[float]:
        if self.dists is None or not self.dists:
            return None
        return min(self.dists)

    def __len__(self) -> int:
        return len(self.times)


def trace_to_jsonl(trace: Trace) -> str:
    """One JSON object per sample; disk points as [x, y], finite points as strings."""
    space = trace.space
    out = []
    n = len(trace.times)
    for i in range(n):
        d = trace.dists[i] if trace.dists is not None else None
        captured = trace.captured_at is not None and i == n - 1
        out.append(
            json.dumps(
                {
                    "step": i,
                    "t": trace.times[i],
                    "lion": space.point_to_json(trace.lion[i]),
                    "man": space.point_to_json(trace.man[i]),
                    "dist": d,
                    "captured": captured,
                },
                separators=(",", ":"),
            )
        )
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Match execution


def _validate_position(space, p, t, who):
    if not space.contains(p):
        raise EngineError(f"{who} position {p!r} at t={t} is outside the space")


def run_match(
    grid: TimeGrid,
    lion,
    man,
    space,
    capture: Optional[CapturePredicate] = None,
    eval_mode: Optional[str] = None,
) -> Trace:
    """Execute a match until capture or the end of the grid.

    ``lion``/``man`` are strategies (objects with .role/.reset()/.move()) or
    RecordedPath instances; at most one may be recorded. With two strategies
    the mode must be strict (simultaneous moves). Default mode: closed when
    one player is recorded, strict otherwise.
    """
    if capture is None:
        capture = CapturePredicate.default_for(space)
    lion_rec, man_rec = _is_recorded(lion), _is_recorded(man)
    if lion_rec and man_rec:
        raise ScenarioError("exactly one of lion/man may be recorded, not both")
    if eval_mode is None:
        eval_mode = "closed" if (lion_rec or man_rec) else "strict"
    if eval_mode not in ("strict", "closed"):
        raise ScenarioError(f"unknown eval mode {eval_mode!r}")
    if eval_mode == "closed" and not (lion_rec or man_rec):
        raise ScenarioError("closed mode requires a recorded opponent (mixed eval modes)")

    for player, rec in ((lion, lion_rec), (man, man_rec)):
        if not rec:
            if getattr(player, "role", None) not in ("lion", "man"):
                raise ScenarioError(f"strategy {player!r} lacks a lion/man role")
            player.reset()
            # adversarial fixtures may peek at the full recorded opponent path
            if getattr(player, "peeks_ahead", False):
                opp = man if player is lion else lion
                if not _is_recorded(opp):
                    raise ScenarioError("a peeking fixture needs a recorded opponent")
                player.attach_opponent_path(opp, grid)
    if not lion_rec and lion.role != "lion":
        raise ScenarioError("lion player has role " + lion.role)
    if not man_rec and man.role != "man":
        raise ScenarioError("man player has role " + man.role)

    times: list[float] = []
    lion_pts: list = []
    man_pts: list = []
    dists: Optional[list[float]] = [] if space.is_metric else None
    captured_at = None

    closed = eval_mode == "closed"
    for j, t in enumerate(grid.times):
        times.append(t)
        if lion_rec:
            lp = lion.at(t)
            if closed:
                lion_pts.append(lp)  # sample at t becomes visible to the man
        if man_rec:
            mp = man.at(t)
            if closed:
                man_pts.append(mp)
        if not lion_rec:
            visible = j + 1 if (closed and man_rec) else j
            lp = lion.move(t, History(space, times, man_pts, visible))
        if not man_rec:
            visible = j + 1 if (closed and lion_rec) else j
            mp = man.move(t, History(space, times, lion_pts, visible))

        _validate_position(space, lp, t, "lion")
        _validate_position(space, mp, t, "man")
        if not (lion_rec and closed):
            lion_pts.append(lp)
        if not (man_rec and closed):
            man_pts.append(mp)
        if dists is not None:
            dists.append(space.distance(lp, mp))
        if capture.holds(space, lp, mp):
            captured_at = t
            break

    return Trace(space, times, lion_pts, man_pts, dists, captured_at)


# ---------------------------------------------------------------------------
# No-lookahead checking


@dataclass
class NoLookaheadReport:
    """Outcome of a causality check: pass/fail plus the first divergence seen."""

    passed: bool
    eval_mode: str
    forks_checked: int
    first_divergence: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.passed


def check_no_lookahead(
    grid: TimeGrid,
    space,
    strategy,
    base_path: RecordedPath,
    fork_times: Iterable[float],
    fork_generator: Callable[[RecordedPath, float], RecordedPath],
    eval_mode: str = "closed",
    capture: Optional[CapturePredicate] = None,
) -> NoLookaheadReport:
    """Fork the opponent path and verify the strategy never used the future.

    Each forked path must agree with the base at all grid samples strictly
    before its fork time. Required output agreement: strict mode at samples
    <= fork time (history < fork time is identical, so a causal deterministic
    strategy cannot differ at the fork sample either); closed mode at samples
    < fork time, and at the fork time whenever the forked opponent sample at
    that instant coincides with the base one.
    """
    fork_times = sorted(fork_times)
    for tf in fork_times:
        if not grid.has_time(tf):
            raise ScenarioError(f"fork time {tf} is not on the grid")

    opp_role = getattr(strategy, "role", None)
    if opp_role not in ("lion", "man"):
        raise ScenarioError("strategy under test lacks a lion/man role")

    def run(path):
        if opp_role == "lion":
            tr = run_match(grid, strategy, path, space, capture, eval_mode)
            return tr.times, tr.lion
        tr = run_match(grid, path, strategy, space, capture, eval_mode)
        return tr.times, tr.man

    base_times, base_out = run(base_path)

    checked = 0
    for tf in fork_times:
        fork_path = fork_generator(base_path, tf)
        for t in grid.times:
            if t >= tf - TIME_TOL:
                break
            if not space.points_equal(base_path.at(t), fork_path.at(t)):
                raise ScenarioError(
                    f"fork generator output disagrees with base at t={t} < fork {tf}"
                )
        fork_times_run, fork_out = run(fork_path)
        checked += 1
        same_at_fork = space.points_equal(base_path.at(tf), fork_path.at(tf))
        for i in range(min(len(base_out), len(fork_out))):
            t = base_times[i]
            if abs(t - fork_times_run[i]) > TIME_TOL:
                break
            if t < tf - TIME_TOL:
                required = True
            elif abs(t - tf) <= TIME_TOL:
                required = eval_mode == "strict" or same_at_fork
            else:
                break
            if required and not space.points_equal(base_out[i], fork_out[i]):
                return NoLookaheadReport(
                    passed=False,
                    eval_mode=eval_mode,
                    forks_checked=checked,
                    first_divergence={
                        "fork_time": tf,
                        "sample_time": t,
                        "base": base_out[i],
                        "fork": fork_out[i],
                    },
                )
    return NoLookaheadReport(passed=True, eval_mode=eval_mode, forks_checked=checked)


# ---------------------------------------------------------------------------
# Retractions


@dataclass(frozen=True)
class Retraction:
    """A retraction r of a space onto a subspace, with the inclusion back.

    Law: retract(include(q)) == q for every subspace point q. ``retract`` must
    be total on the points the opponent can reach; a partial map (e.g. the
    radial retraction at 0) raises and the error propagates to the caller.
    """

    source: object
    target: object
    retract: Callable
    include: Callable = staticmethod(lambda q: q)

    def check_roundtrip(self, points: Iterable) -> bool:
        return all(
            self.target.points_equal(self.retract(self.include(q)), q) for q in points
        )


def identity_retraction(space) -> Retraction:
    return Retraction(source=space, target=space, retract=lambda p: p)


def compose_retractions(outer: Retraction, inner: Retraction) -> Retraction:
    """inner: P->Q, outer: Q->R gives the composite retraction P->R."""
    return Retraction(
        source=inner.source,
        target=outer.target,
        retract=lambda p: outer.retract(inner.retract(p)),
        include=lambda r: inner.include(outer.include(r)),
    )


class _LiftedMan:
    """Man strategy on the big space: run the subspace strategy on r(history)."""

    role = "man"

    def __init__(self, retraction: Retraction, inner):
        self.retraction = retraction
        self.inner = inner

    def reset(self):
        self.inner.reset()

    def move(self, t, history: History):
        mapped = MappedHistory(self.retraction.target, history, self.retraction.retract)
        q = self.inner.move(t, mapped)
        return self.retraction.include(q)


class _ProjectedLion:
    """Lion strategy on the subspace: retract the big-space strategy's output."""

    role = "lion"

    def __init__(self, retraction: Retraction, inner):
        self.retraction = retraction
        self.inner = inner

    def reset(self):
        self.inner.reset()

    def move(self, t, history: History):
        embedded = MappedHistory(self.retraction.source, history, self.retraction.include)
        p = self.inner.move(t, embedded)
        return self.retraction.retract(p)


def lift_man_strategy(retraction: Retraction, man_strategy) -> _LiftedMan:
    """Transfer a man strategy from the subspace to the whole space.

    The lifted strategy feeds retracted opponent samples to the inner strategy
    and emits its outputs; every output lies in the subspace.
    """
    if getattr(man_strategy, "role", None) != "man":
        raise ScenarioError("lift_man_strategy needs a man strategy")
    return _LiftedMan(retraction, man_strategy)


def project_lion_strategy(retraction: Retraction, lion_strategy) -> _ProjectedLion:
    """Transfer a lion strategy from the whole space down to the subspace."""
    if getattr(lion_strategy, "role", None) != "lion":
        raise ScenarioError("project_lion_strategy needs a lion strategy")
    return _ProjectedLion(retraction, lion_strategy)
