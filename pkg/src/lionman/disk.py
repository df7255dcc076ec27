"""The closed unit disk, circle and square: geometry and continuum strategies.

Points of all continuum spaces are complex numbers. Angles are stored in
turns (period 1), matching the e^(2*pi*i*theta) convention, so no stray
2*pi factors appear anywhere.

Strategies:

* ``BesicovitchMan``   - boundary evader theta = (2*rho - 1)*(omega + 1/2),
  driven by an incremental angle lift of the pursuer's polar angle.
* ``HausdorffLion``    - replay a chosen path to the man's start at double
  speed, then shadow the man's own history at 2t-1; capture at t = 1.
* ``FixedPointFreeMan``- emit f(pursuer sample) for a fixed-point-free f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import EngineError, FuncPath, RecordedPath, Retraction

__all__ = [
    "DomainError",
    "DiskSpace",
    "CircleSpace",
    "SquareSpace",
    "SegmentSpace",
    "principal_angle",
    "radial_retract",
    "LiftState",
    "lift_step",
    "BesiState",
    "besicovitch_step",
    "BesicovitchMan",
    "HausdorffLion",
    "FixedPointFreeMan",
    "connect_path",
    "radial_retraction",
    "vertical_edge_retraction",
]

TWO_PI = 2.0 * math.pi
ZERO_THRESHOLD = 1e-12  # samples this close to 0 count as the origin


class DomainError(ValueError):
    """A map was applied outside its domain (e.g. radial retraction at 0)."""


# ---------------------------------------------------------------------------
# Spaces


class ContinuumSpace:
    """Shared behavior of the metric spaces (points are complex numbers)."""

    is_metric = True
    name = "continuum"

    def contains(self, p) -> bool:
        raise NotImplementedError

    def distance(self, a, b) -> float:
        return abs(a - b)

    def points_equal(self, a, b) -> bool:
        return a == b

    def interpolate(self, a, b, frac: float):
        if frac <= 0.0:
            return a
        if frac >= 1.0:
            return b
        return a + (b - a) * frac

    def clamp(self, p):
        """Nearest in-space point; used by the service on raw client input."""
        raise NotImplementedError

    def probe_points(self):
        """Deterministic sample of the space for best-effort map checks."""
        raise NotImplementedError

    def point_to_json(self, p):
        return [p.real, p.imag]

    def point_from_json(self, obj):
        if not (isinstance(obj, (list, tuple)) and len(obj) == 2):
            raise EngineError(f"expected [x, y], got {obj!r}")
        return complex(float(obj[0]), float(obj[1]))


class DiskSpace(ContinuumSpace):
    """The closed unit disk, |z| <= 1 (with 1e-12 slack for rounding)."""

    name = "disk"
    tol = 1e-12

    def contains(self, p) -> bool:
        return abs(p) <= 1.0 + self.tol

    def clamp(self, p):
        r = abs(p)
        return p if r <= 1.0 else p / r

    def probe_points(self):
        pts = [0j]
        for k in range(8):
            a = TWO_PI * k / 8.0
            z = complex(math.cos(a), math.sin(a))
            pts += [z, 0.5 * z, 0.25 * z]
        return pts


class CircleSpace(ContinuumSpace):
    """The unit circle, ||z| - 1| <= 1e-9."""

    name = "circle"
    tol = 1e-9

    def contains(self, p) -> bool:
        return abs(abs(p) - 1.0) <= self.tol

    def clamp(self, p):
        r = abs(p)
        if r <= ZERO_THRESHOLD:
            raise DomainError("cannot clamp the origin onto the circle")
        return p / r

    def interpolate(self, a, b, frac: float):
        if frac <= 0.0:
            return a
        if frac >= 1.0:
            return b
        a0 = principal_angle(a)
        d = principal_angle(b) - a0
        d -= math.floor(d)
        if d > 0.5:
            d -= 1.0  # shorter arc; ties go counterclockwise
        ang = TWO_PI * (a0 + d * frac)
        return complex(math.cos(ang), math.sin(ang))

    def probe_points(self):
        return [
            complex(math.cos(TWO_PI * k / 16.0), math.sin(TWO_PI * k / 16.0))
            for k in range(16)
        ]


class SquareSpace(ContinuumSpace):
    """The unit square [0,1] x [0,1] as a subset of the complex plane."""

    name = "square"
    tol = 1e-12

    def contains(self, p) -> bool:
        return (
            -self.tol <= p.real <= 1.0 + self.tol
            and -self.tol <= p.imag <= 1.0 + self.tol
        )

    def clamp(self, p):
        return complex(min(max(p.real, 0.0), 1.0), min(max(p.imag, 0.0), 1.0))

    def probe_points(self):
        return [
            complex(i / 4.0, j / 4.0) for i in range(5) for j in range(5)
        ]


class SegmentSpace(ContinuumSpace):
    """A straight segment between two complex endpoints (a 1-d subspace)."""

    name = "segment"
    tol = 1e-9

    def __init__(self, a: complex, b: complex):
        if a == b:
            raise EngineError("degenerate segment")
        self.a = complex(a)
        self.b = complex(b)
        self._d = self.b - self.a
        self._len2 = abs(self._d) ** 2

    def _param(self, p) -> float:
        w = p - self.a
        return (w.real * self._d.real + w.imag * self._d.imag) / self._len2

    def contains(self, p) -> bool:
        u = self._param(p)
        if u < -self.tol or u > 1.0 + self.tol:
            return False
        return abs(p - (self.a + self._d * u)) <= self.tol

    def clamp(self, p):
        u = min(max(self._param(p), 0.0), 1.0)
        return self.a + self._d * u

    def probe_points(self):
        return [self.interpolate(self.a, self.b, k / 8.0) for k in range(9)]


# ---------------------------------------------------------------------------
# Angles and lifting


def principal_angle(z: complex) -> float:
    """Principal argument of a nonzero point, in turns, in [0, 1)."""
    if abs(z) <= ZERO_THRESHOLD:
        raise DomainError("principal_angle of the origin")
    a = (math.atan2(z.imag, z.real) / TWO_PI) % 1.0
    return 0.0 if a >= 1.0 else a  # (-eps) % 1.0 can round up to exactly 1.0


def radial_retract(z: complex) -> complex:
    """z / |z|; the radial retraction of the punctured disk onto the circle."""
    r = abs(z)
    if r <= ZERO_THRESHOLD:
        raise DomainError("radial retraction is undefined at the origin")
    return z / r


@dataclass(frozen=True)
class LiftState:
    """Running state of the incremental angle lift along the pursuer's path.

    While inside a component of the path away from the origin, ``omega`` is
    the continuously lifted angle (in turns) and ``last_angle`` the principal
    argument of the last nonzero sample. The first lifted value of every
    component is taken in [0, 1): a canonical, history-only base choice, so
    the lift satisfies the no-lookahead rule by construction.
    """

    in_component: bool = False
    omega: float = 0.0
    last_angle: float = 0.0

    @staticmethod
    def initial() -> "LiftState":
        return LiftState(False, 0.0, 0.0)


def lift_step(state: LiftState, z: complex, zero_threshold: float = ZERO_THRESHOLD) -> LiftState:
    """Advance the lift by one sample. A (near-)zero sample closes the component."""
    if abs(z) <= zero_threshold:
        if not state.in_component:
            return state
        return LiftState(False, state.omega, state.last_angle)
    a = principal_angle(z)
    if not state.in_component:
        return LiftState(True, a, a)
    d = a - state.last_angle
    d -= math.floor(d)
    if d > 0.5:
        d -= 1.0  # principal-branch increment in (-1/2, 1/2]
    return LiftState(True, state.omega + d, a)


# ---------------------------------------------------------------------------
# Besicovitch boundary evader


@dataclass(frozen=True)
class BesiState:
    """Lift state plus the rho/theta computed for the latest pursuer sample."""

    lift: LiftState
    rho: float = 0.0
    theta: float = 0.0

    @staticmethod
    def initial() -> "BesiState":
        return BesiState(LiftState.initial(), 0.0, 0.0)


def besicovitch_step(state: BesiState, lion_sample: complex):
    """Consume one pursuer sample; return (new state, evader point on the circle).

    theta = 0 while rho <= 1/2, theta = (2*rho - 1)*(omega + 1/2) outside;
    the branches agree at rho = 1/2. When the pursuer reaches the boundary
    the output is exactly the antipode of the lifted direction.
    """
    lift = lift_step(state.lift, lion_sample)
    rho = abs(lion_sample)
    if rho <= 0.5:
        theta = 0.0
    else:
        theta = (2.0 * rho - 1.0) * (lift.omega + 0.5)
    ang = TWO_PI * theta
    out = complex(math.cos(ang), math.sin(ang))
    return BesiState(lift, rho, theta), out


class BesicovitchMan:
    """Online boundary evader; starts at 1+0j against a pursuer at the center.

    Closed mode evaluates the formula on the pursuer sample at the current
    instant (the faithful offline semantics); in strict mode the latest
    strictly-earlier sample is used, a one-step lag that vanishes linearly
    in dt for continuous opponents.
    """

    role = "man"

    def __init__(self):
        self.reset()

    def reset(self):
        self._state = BesiState.initial()
        self._consumed = 0
        self._out = 1.0 + 0.0j

    @property
    def state(self) -> BesiState:
        return self._state

    def move(self, t, history):
        n = len(history)
        while self._consumed < n:
            z = history.position(self._consumed)
            self._state, self._out = besicovitch_step(self._state, z)
            self._consumed += 1
        return self._out


# ---------------------------------------------------------------------------
# Hausdorff pursuer


class HausdorffLion:
    """Pursuer for Hausdorff path-connected spaces; captures at t = 1.

    Follows its chosen path gamma (from the lion start to the man start) at
    double speed until t = 1/2, then emits the man's own history evaluated at
    2t - 1 (interpolating between recorded samples), and the man's position
    at time 1 from then on. Causal since 2t - 1 < t before t = 1.
    """

    role = "lion"

    def __init__(self, gamma: RecordedPath):
        self.gamma = gamma

    def reset(self):
        pass

    def move(self, t, history):
        if t <= 0.5:
            return self.gamma.at(2.0 * t)
        if len(history) == 0:
            return self.gamma.at(1.0)
        return history.interpolated(min(2.0 * t - 1.0, 1.0))


# ---------------------------------------------------------------------------
# Fixed-point-free evader


class FixedPointFreeMan:
    """Evader S(beta)(t) = f(beta(t)) for a fixed-point-free map f.

    Construction runs a best-effort self-check: f is sampled on the space's
    probe set and rejected if any probe moves less than ``min_displacement``.
    In strict mode f is applied to the latest available sample (documented
    one-step lag); before any opponent sample is visible the configured
    pursuer start is used, so the evader starts at f(lion_start).
    """

    role = "man"

    def __init__(self, f, space, lion_start, check=True, min_displacement=1e-9):
        if check:
            for p in space.probe_points():
                if abs(f(p) - p) <= min_displacement:
                    raise DomainError(f"map has a fixed point near {p!r}")
        self.f = f
        self.space = space
        self.lion_start = lion_start

    def reset(self):
        pass

    def move(self, t, history):
        latest = history.latest()
        z = self.lion_start if latest is None else latest[1]
        return self.f(z)


# ---------------------------------------------------------------------------
# Paths between points and standard retractions


def connect_path(space, a: complex, b: complex) -> RecordedPath:
    """A recorded path on [0,1] from a to b: straight segment, or the shorter
    arc on the circle. Endpoints are hit exactly."""
    if not space.contains(a) or not space.contains(b):
        raise EngineError("connect_path endpoints must lie in the space")

    def at(t: float):
        u = min(max(t, 0.0), 1.0)
        return space.interpolate(a, b, u)

    return FuncPath(at)


def radial_retraction(disk: DiskSpace, circle: CircleSpace) -> Retraction:
    """Disk minus the origin onto the circle. Partial: raises at the origin."""
    return Retraction(source=disk, target=circle, retract=radial_retract)


def vertical_edge_retraction(square: SquareSpace, edge: SegmentSpace) -> Retraction:
    """Unit square onto its bottom edge by dropping the vertical coordinate."""
    return Retraction(
        source=square,
        target=edge,
        retract=lambda p: complex(p.real, 0.0),
    )
