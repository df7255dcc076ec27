"""Finite Alexandroff spaces as specialization preorders.

Convention (frozen): x <= y iff x belongs to every open set containing y,
i.e. x is in the minimal open set U_y. Open sets are exactly the downward
closed subsets. The dual space reverses the order.

Paths are step paths: piecewise-constant with explicit values at their jump
instants. Continuity at a breakpoint reduces to specialization comparisons
between the neighboring interval values and the instant value; an
independent oracle checks the same thing by enumerating open sets and
testing preimages for openness in [0, inf).
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import TIME_TOL, History, RecordedPath, ScenarioError, TimeGrid

__all__ = [
    "TopologyError",
    "NoMinimumError",
    "FiniteSpace",
    "StepPath",
    "Fence",
    "build_space",
    "dual",
    "open_hull",
    "is_continuous",
    "is_continuous_oracle",
    "continuity_batch",
    "continuity_oracle_batch",
    "path_components",
    "fence_between",
    "fence_path",
    "AspaceLion",
    "falsify_man_strategy",
    "FalsifyResult",
    "replay_strategy",
    "enumerate_preorders",
    "space_from_json",
    "space_to_json",
    "load_space",
    "step_path_from_json",
    "step_path_to_json",
]


class TopologyError(ScenarioError):
    """Input relation/open-set family does not define a finite topology."""


class NoMinimumError(Exception):
    """The space has no minimum point (needed by the falsifier)."""


# ---------------------------------------------------------------------------
# Spaces


class FiniteSpace:
    """A finite topological space presented by its specialization preorder.

    ``points`` are sorted string identifiers; ``mat[i, j]`` is True iff
    point i <= point j (i.e. i lies in every open set containing j).
    """

    is_metric = False
    name = "finite"

    def __init__(self, points: Sequence[str], mat: np.ndarray, opens_family=None):
        self.points = tuple(points)
        self._idx = {p: i for i, p in enumerate(self.points)}
        if len(self._idx) != len(self.points):
            raise TopologyError("duplicate point identifiers")
        mat = np.asarray(mat, dtype=bool)
        n = len(self.points)
        if mat.shape != (n, n):
            raise TopologyError("relation matrix shape mismatch")
        if not mat[np.diag_indices(n)].all():
            raise TopologyError("relation is not reflexive")
        closure = _transitive_closure(mat)
        if not (closure == mat).all():
            raise TopologyError("relation is not transitive")
        self.mat = mat
        self.mat.setflags(write=False)
        self._opens_family = opens_family  # explicit generating family, if given

    # -- engine interface ---------------------------------------------------

    def contains(self, p) -> bool:
        return p in self._idx

    def points_equal(self, a, b) -> bool:
        return a == b

    def points_close(self, a, b, tol=None) -> bool:
        return a == b

    def distance(self, a, b):
        return None

    def point_to_json(self, p):
        return p

    def point_from_json(self, obj):
        if obj not in self._idx:
            raise ScenarioError(f"unknown point {obj!r}")
        return obj

    # -- order and topology -------------------------------------------------

    def index(self, p: str) -> int:
        return self._idx[p]

    def leq(self, x: str, y: str) -> bool:
        """x <= y: x belongs to every open set containing y."""
        return bool(self.mat[self._idx[x], self._idx[y]])

    def comparable(self, x: str, y: str) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def minimal_open(self, x: str) -> frozenset:
        """U_x = {y : y <= x}, the open hull of the point x."""
        col = self.mat[:, self._idx[x]]
        return frozenset(p for p, inside in zip(self.points, col) if inside)

    def is_open(self, subset: Iterable[str]) -> bool:
        """Open iff downward closed."""
        s = frozenset(subset)
        for y in s:
            if y not in self._idx:
                raise ScenarioError(f"unknown point {y!r}")
            if not self.minimal_open(y) <= s:
                return False
        return True

    def all_opens(self) -> list[frozenset]:
        """Every open set. Enumerated as down-sets for <= 12 points, via the
        explicit generating family for <= 20; larger spaces are refused."""
        n = len(self.points)
        if n <= 12:
            opens = []
            for mask in range(1 << n):
                s = frozenset(self.points[i] for i in range(n) if mask >> i & 1)
                if self.is_open(s):
                    opens.append(s)
            return opens
        if self._opens_family is not None and n <= 20:
            return list(self._opens_family)
        raise ScenarioError(f"open-set enumeration refused for {n} points")

    def opens_matrix(self) -> np.ndarray:
        """Boolean membership matrix of all_opens(), one row per open set."""
        opens = self.all_opens()
        m = np.zeros((len(opens), len(self.points)), dtype=bool)
        for r, U in enumerate(opens):
            for p in U:
                m[r, self._idx[p]] = True
        return m

    def is_t0(self) -> bool:
        """Distinct points have distinct open hulls <=> antisymmetry."""
        both = self.mat & self.mat.T
        return not (both & ~np.eye(len(self.points), dtype=bool)).any()

    def minimum(self) -> Optional[str]:
        """The point lying in every nonempty open set, if one exists."""
        rows = self.mat.all(axis=1)
        idx = np.flatnonzero(rows)
        return self.points[idx[0]] if len(idx) else None

    def __repr__(self):
        return f"FiniteSpace({len(self.points)} points)"


def _transitive_closure(mat: np.ndarray) -> np.ndarray:
    closure = mat.copy()
    n = mat.shape[0]
    for _ in range(n):
        nxt = closure | (closure @ closure)
        if (nxt == closure).all():
            break
        closure = nxt
    return closure


def build_space(points: Sequence[str], leq_pairs=None, opens=None) -> FiniteSpace:
    """Build a space from a relation (closed to a preorder) or explicit opens.

    ``leq_pairs``: iterable of (x, y) meaning x <= y; the reflexive-transitive
    closure is taken. ``opens``: family of subsets that must already be a
    topology (contain the empty set and the whole space, closed under unions
    and intersections); the specialization preorder is derived from it.
    """
    pts = sorted(dict.fromkeys(points))
    if not pts:
        raise TopologyError("a space needs at least one point")
    if (leq_pairs is None) == (opens is None):
        raise TopologyError("give exactly one of leq_pairs / opens")
    idx = {p: i for i, p in enumerate(pts)}
    n = len(pts)
    if leq_pairs is not None:
        mat = np.eye(n, dtype=bool)
        for x, y in leq_pairs:
            if x not in idx or y not in idx:
                raise TopologyError(f"relation mentions unknown point ({x!r}, {y!r})")
            mat[idx[x], idx[y]] = True
        return FiniteSpace(pts, _transitive_closure(mat))

    family = [frozenset(u) for u in opens]
    all_pts = frozenset(pts)
    for u in family:
        if not u <= all_pts:
            raise TopologyError(f"open set {sorted(u)} mentions unknown points")
    fam = set(family)
    if frozenset() not in fam or all_pts not in fam:
        raise TopologyError("a topology contains the empty set and the whole space")
    for a, b in combinations(fam, 2):
        if a | b not in fam:
            raise TopologyError(f"family not closed under union: {sorted(a)} | {sorted(b)}")
        if a & b not in fam:
            raise TopologyError(f"family not closed under intersection: {sorted(a)} & {sorted(b)}")
    mat = np.zeros((n, n), dtype=bool)
    for y in pts:
        u_y = all_pts
        for u in fam:
            if y in u:
                u_y = u_y & u
        for x in u_y:
            mat[idx[x], idx[y]] = True
    return FiniteSpace(pts, mat, opens_family=sorted(fam, key=lambda s: (len(s), sorted(s))))


def dual(space: FiniteSpace) -> FiniteSpace:
    """Same points, opens become the closed sets: the order reverses."""
    return FiniteSpace(space.points, space.mat.T.copy())


def open_hull(space: FiniteSpace, subset: Iterable[str]) -> frozenset:
    """Smallest open superset: the union of U_y over y in the subset."""
    out = frozenset()
    for y in subset:
        out |= space.minimal_open(y)
    return out


def path_components(space: FiniteSpace) -> list[frozenset]:
    """Connected components of the comparability graph (= path components)."""
    unseen = set(space.points)
    comps = []
    while unseen:
        seed = min(unseen)
        comp = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for y in space.points:
                if y not in comp and space.comparable(x, y):
                    comp.add(y)
                    frontier.append(y)
        unseen -= comp
        comps.append(frozenset(comp))
    return comps


def is_path_connected(space: FiniteSpace) -> bool:
    return len(path_components(space)) == 1


# ---------------------------------------------------------------------------
# Step paths


class StepPath(RecordedPath):
    """Piecewise-constant path with explicit values at its jump instants.

    ``intervals[i]`` holds on the open interval (breakpoints[i],
    breakpoints[i+1]) (the last one is unbounded); ``instants[i]`` is the
    value exactly at breakpoints[i]. breakpoints[0] must be 0.
    """

    def __init__(self, breakpoints, intervals, instants, canonical=False):
        bp = tuple(float(b) for b in breakpoints)
        iv = tuple(intervals)
        iw = tuple(instants)
        if not bp or abs(bp[0]) > TIME_TOL:
            raise ScenarioError("breakpoints must start at 0")
        if any(not b2 > b1 for b1, b2 in zip(bp, bp[1:])):
            raise ScenarioError("breakpoints must be strictly increasing")
        if not (len(bp) == len(iv) == len(iw)):
            raise ScenarioError("breakpoints/intervals/instants lengths differ")
        if canonical:
            bp, iv, iw = _canonicalize(bp, iv, iw)
        self.breakpoints = bp
        self.intervals = iv
        self.instants = iw

    @property
    def jumps(self) -> int:
        return len(self.breakpoints) - 1

    def at(self, t: float):
        if t < -TIME_TOL:
            raise ScenarioError("step paths live on [0, inf)")
        i = bisect_right(self.breakpoints, t + TIME_TOL) - 1
        if i < 0:
            i = 0
        if abs(self.breakpoints[i] - t) <= TIME_TOL:
            return self.instants[i]
        return self.intervals[i]

    def values(self):
        return set(self.intervals) | set(self.instants)

    def canonical(self) -> "StepPath":
        return StepPath(self.breakpoints, self.intervals, self.instants, canonical=True)

    def __eq__(self, other):
        if not isinstance(other, StepPath):
            return NotImplemented
        return (
            self.breakpoints == other.breakpoints
            and self.intervals == other.intervals
            and self.instants == other.instants
        )

    def __hash__(self):
        return hash((self.breakpoints, self.intervals, self.instants))

    def __repr__(self):
        bits = [f"{self.instants[0]}@0"]
        for i, v in enumerate(self.intervals):
            bits.append(f"({v})")
            if i + 1 < len(self.breakpoints):
                bits.append(f"{self.instants[i+1]}@{self.breakpoints[i+1]:g}")
        return "StepPath[" + " ".join(bits) + "]"


def _canonicalize(bp, iv, iw):
    """Drop breakpoints whose instant and both neighbor intervals agree."""
    keep = [0]
    for i in range(1, len(bp)):
        if iw[i] == iv[i - 1] == iv[i]:
            continue
        keep.append(i)
    out_bp, out_iv, out_iw = [], [], []
    for j, i in enumerate(keep):
        out_bp.append(bp[i])
        out_iw.append(iw[i])
        nxt = keep[j + 1] if j + 1 < len(keep) else len(bp)
        out_iv.append(iv[nxt - 1])
    return tuple(out_bp), tuple(out_iv), tuple(out_iw)


@dataclass(frozen=True)
class Fence:
    """Points with consecutive members comparable; witnesses path-connection."""

    points: tuple[str, ...]

    def validate(self, space: FiniteSpace) -> bool:
        return all(
            space.comparable(a, b) for a, b in zip(self.points, self.points[1:])
        )


# ---------------------------------------------------------------------------
# Continuity: direct checker and open-set oracle


def is_continuous(space: FiniteSpace, path: StepPath) -> bool:
    """At every breakpoint both neighboring interval values must specialize
    to the instant value: intervals[i-1] <= instants[i] and
    intervals[i] <= instants[i]."""
    for i, w in enumerate(path.instants):
        if i > 0 and not space.leq(path.intervals[i - 1], w):
            return False
        if not space.leq(path.intervals[i], w):
            return False
    return True


def is_continuous_oracle(space: FiniteSpace, path: StepPath) -> bool:
    """Independent checker: enumerate every open set, build its preimage as a
    union of open intervals, rays and instants, and test openness in [0, inf)."""
    k = len(path.breakpoints)
    for U in space.all_opens():
        # pieces of the preimage
        interval_in = [path.intervals[i] in U for i in range(k)]
        instant_in = [path.instants[i] in U for i in range(k)]
        # each instant of the preimage must be interior: covered on the right
        # (and on the left, except at 0 where [0, d) is relatively open)
        for i in range(k):
            if not instant_in[i]:
                continue
            if not interval_in[i]:
                return False
            if i > 0 and not interval_in[i - 1]:
                return False
    return True


def continuity_batch(space: FiniteSpace, W: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Vectorized is_continuous over many paths sharing one breakpoint count.

    W, V: integer point-index arrays of shape (m, k+1): instants and interval
    values per breakpoint. Returns a boolean verdict per row.
    """
    leq = space.mat
    ok = leq[V[:, 0], W[:, 0]].copy()
    for i in range(1, W.shape[1]):
        ok &= leq[V[:, i - 1], W[:, i]] & leq[V[:, i], W[:, i]]
    return ok


def continuity_oracle_batch(space: FiniteSpace, W: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Vectorized oracle: same open-set/preimage-openness logic as
    is_continuous_oracle, evaluated per open set across all rows."""
    opens = space.opens_matrix()
    m, kp1 = W.shape
    ok = np.ones(m, dtype=bool)
    for row in opens:
        w_in = row[W]
        v_in = row[V]
        bad = w_in[:, 0] & ~v_in[:, 0]
        for i in range(1, kp1):
            bad |= w_in[:, i] & ~(v_in[:, i] & v_in[:, i - 1])
        ok &= ~bad
    return ok


# ---------------------------------------------------------------------------
# Fences and fence paths


def fence_between(space: FiniteSpace, a: str, b: str) -> Fence:
    """Shortest fence from a to b: BFS on the comparability graph, ties broken
    lexicographically. Raises if a and b lie in different components."""
    for p in (a, b):
        if not space.contains(p):
            raise ScenarioError(f"unknown point {p!r}")
    if a == b:
        return Fence((a,))
    dist = {b: 0}
    frontier = [b]
    while frontier:
        nxt = []
        for x in frontier:
            for y in sorted(space.points):
                if y not in dist and space.comparable(x, y):
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    if a not in dist:
        raise ScenarioError(f"{a!r} and {b!r} lie in different path components")
    seq = [a]
    cur = a
    while cur != b:
        cur = min(
            y for y in space.points if space.comparable(cur, y) and dist.get(y) == dist[cur] - 1
        )
        seq.append(cur)
    return Fence(tuple(seq))


def fence_path(space: FiniteSpace, a: str, b: str, arrival_time: float) -> StepPath:
    """Continuous step path holding each fence point on an interval.

    Jump instants carry the specialization-larger endpoint. Ascending jumps
    happen at their visit instant; a descending final jump is pulled to the
    midpoint before arrival so that b holds at and after ``arrival_time``.
    """
    if not arrival_time > 0:
        raise ScenarioError("arrival_time must be positive")
    fence = fence_between(space, a, b)
    c = fence.points
    m = len(c) - 1
    if m == 0:
        return StepPath((0.0,), (a,), (a,))
    s = [j * arrival_time / m for j in range(1, m + 1)]
    if not space.leq(c[m - 1], c[m]):  # descending final jump: arrive early
        prev = s[m - 2] if m >= 2 else 0.0
        s[m - 1] = 0.5 * (prev + arrival_time)
    breakpoints = (0.0, *s)
    intervals = c
    instants = [c[0]]
    for j in range(1, m + 1):
        instants.append(c[j] if space.leq(c[j - 1], c[j]) else c[j - 1])
    path = StepPath(breakpoints, intervals, tuple(instants))
    assert is_continuous(space, path), "fence_path constructed a discontinuous path"
    return path


# ---------------------------------------------------------------------------
# The finite-space lion


def _shift_path(path: StepPath, offset: float, until: float) -> list:
    """Pieces of ``path`` shifted by offset, truncated to [offset, until)."""
    pieces = []
    for i, bp in enumerate(path.breakpoints):
        t = bp + offset
        if t >= until - TIME_TOL:
            break
        pieces.append((t, path.instants[i], path.intervals[i]))
    return pieces


class AspaceLion:
    """Constructive finite-space pursuer (discrete germ-mirror realization).

    Phase 1 follows a precomputed path visiting the enumeration point y_n at
    each scheduled instant t_n = 1 - 2^(-n) (fence paths concatenated; the
    enumeration cycles all points lexicographically, so every point recurs).
    At the first scheduled instant whose opponent sample lies in U_{y_n} the
    strategy switches to Phase 2 and mirrors the opponent's most recent
    strictly-earlier sample.

    Discrete guarantee: against recorded step paths sampled on the grid,
    capture occurs inside one of the opponent's constant pieces of length
    >= dt. This is a sample-resolution surrogate of the germ-copying
    strategy, not a continuous-time theorem.
    """

    role = "lion"

    def __init__(self, space: FiniteSpace, lion_start: str, n_events: int = 24):
        if not is_path_connected(space):
            raise ScenarioError("the finite-space lion needs a path-connected space")
        if not space.contains(lion_start):
            raise ScenarioError(f"unknown start {lion_start!r}")
        self.space = space
        self.start = lion_start
        order = sorted(space.points)
        self.schedule = tuple(
            (1.0 - 2.0 ** (-n), order[(n - 1) % len(order)]) for n in range(1, n_events + 1)
        )
        self.beta = self._build_beta()
        self.reset()

    @property
    def event_times(self) -> tuple[float, ...]:
        return tuple(t for t, _ in self.schedule)

    def _build_beta(self) -> StepPath:
        pieces = [(0.0, self.start, self.start)]
        cur = self.start
        prev_t = 0.0
        for t_n, y_n in self.schedule:
            leg = fence_path(self.space, cur, y_n, arrival_time=t_n - prev_t)
            for t, w, v in _shift_path(leg, prev_t, t_n):
                if abs(t - pieces[-1][0]) <= TIME_TOL:
                    pieces[-1] = (pieces[-1][0], w, v)
                else:
                    pieces.append((t, w, v))
            # pin the visit: y_n exactly at t_n
            if abs(pieces[-1][0] - t_n) > TIME_TOL:
                pieces.append((t_n, y_n, y_n))
            cur = y_n
            prev_t = t_n
        bp = [p[0] for p in pieces]
        iw = [p[1] for p in pieces]
        iv = [p[2] for p in pieces]
        path = StepPath(bp, iv, iw)
        assert is_continuous(self.space, path), "phase-1 path must be continuous"
        return path

    def reset(self):
        pass  # trigger state re-derived from history each move (stateless)

    def _trigger_time(self, t: float, history: History) -> Optional[float]:
        # scan the schedule; an event is decidable once its sample is visible
        for t_n, y_n in self.schedule:
            if t_n > t + TIME_TOL:
                break
            got = history.latest_at_or_before(t_n)
            if got is None:
                continue
            t_s, sample = got
            if abs(t_s - t_n) > TIME_TOL:
                continue  # strict mode at t == t_n: decide at the next step
            if self.space.leq(sample, y_n):  # sample in U_{y_n}
                return t_n
        return None

    def move(self, t, history: History):
        trig = self._trigger_time(t, history)
        if trig is not None and t > trig + TIME_TOL:
            prev = history.latest_strictly_before(t)
            if prev is not None:
                return prev[1]
        return self.beta.at(t)


# ---------------------------------------------------------------------------
# Closed-mode replay and the falsifier


def replay_strategy(grid: TimeGrid, space, strategy, opponent_path, eval_mode="closed"):
    """Evaluate a strategy against a recorded opponent without capture
    semantics; returns its output at every grid sample."""
    strategy.reset()
    if getattr(strategy, "peeks_ahead", False):
        strategy.attach_opponent_path(opponent_path, grid)
    times: list[float] = []
    opp: list = []
    out = []
    for j, t in enumerate(grid.times):
        times.append(t)
        opp.append(opponent_path.at(t))
        visible = j + 1 if eval_mode == "closed" else j
        out.append(strategy.move(t, History(space, times, opp, visible)))
    return out


@dataclass
class FalsifyResult:
    """Defeating pursuer path for a man strategy in a space with a minimum."""

    beta_prime: StepPath
    capture_time: float
    response_at_1: str
    verified: bool
    causality_violation: Optional[dict] = None


def falsify_man_strategy(
    space: FiniteSpace,
    lion_start: str,
    man_strategy,
    dt: float = 1.0 / 16.0,
) -> FalsifyResult:
    """Build the pursuer path that defeats any causal man strategy at t = 1.

    The pursuer walks to the minimum x0 by t = 1/2 and sits there; the man's
    closed-mode response at t = 1 is queried by replay, and the path is then
    rewritten to jump to exactly that point at t = 1 (continuous, because x0
    specializes to everything). A verification replay confirms coincidence at
    t = 1; a mismatch means the strategy used the future and is reported as a
    causality violation.
    """
    x0 = space.minimum()
    if x0 is None:
        raise NoMinimumError("falsification needs a minimum point (x0 in every open set)")
    if not space.contains(lion_start):
        raise ScenarioError(f"unknown start {lion_start!r}")

    beta = fence_path(space, lion_start, x0, arrival_time=0.5)
    grid = TimeGrid(dt, 1.0, event_times=(0.5, 1.0))
    base_out = replay_strategy(grid, space, man_strategy, beta, eval_mode="closed")
    i1 = grid.index_of(1.0)
    p = base_out[i1]

    bp = list(beta.breakpoints) + [1.0]
    iv = list(beta.intervals) + [p]
    iw = list(beta.instants) + [p]
    beta_prime = StepPath(bp, iv, iw)
    assert is_continuous(space, beta_prime)

    fork_out = replay_strategy(grid, space, man_strategy, beta_prime, eval_mode="closed")
    violation = None
    for i, t in enumerate(grid.times):
        if t >= 1.0 - TIME_TOL:
            break
        if fork_out[i] != base_out[i]:
            violation = {"sample_time": t, "base": base_out[i], "fork": fork_out[i]}
            break
    coincides = fork_out[i1] == p
    if violation is None and not coincides:
        violation = {"sample_time": 1.0, "base": p, "fork": fork_out[i1]}
    return FalsifyResult(
        beta_prime=beta_prime,
        capture_time=1.0,
        response_at_1=p,
        verified=coincides and violation is None,
        causality_violation=violation,
    )


# ---------------------------------------------------------------------------
# Enumeration of small spaces


def enumerate_preorders(n: int, chunk: int = 1 << 16) -> list[np.ndarray]:
    """All reflexive-transitive boolean relations on n labeled points.

    Raw enumeration (no isomorphism reduction): filters all 2^(n(n-1))
    off-diagonal bit patterns for transitivity, vectorized in chunks.
    """
    if n < 1 or n > 5:
        raise ScenarioError("preorder enumeration supported for 1..5 points")
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    bits = len(off)
    total = 1 << bits
    out = []
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        codes = np.arange(lo, hi, dtype=np.int64)
        mats = np.zeros((hi - lo, n, n), dtype=bool)
        mats[:, np.arange(n), np.arange(n)] = True
        for b, (i, j) in enumerate(off):
            mats[:, i, j] = (codes >> b) & 1
        m8 = mats.astype(np.uint8)
        closure = (np.einsum("bij,bjk->bik", m8, m8) > 0)
        transitive = ~(closure & ~mats).any(axis=(1, 2))
        out.extend(mats[transitive])
    return out


# ---------------------------------------------------------------------------
# JSON formats


def space_to_json(space: FiniteSpace) -> dict:
    pairs = [
        [x, y]
        for x in space.points
        for y in space.points
        if x != y and space.leq(x, y)
    ]
    return {"points": list(space.points), "leq": pairs}


def space_from_json(obj: dict) -> FiniteSpace:
    if not isinstance(obj, dict) or "points" not in obj:
        raise TopologyError("space JSON needs a 'points' list")
    points = obj["points"]
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise TopologyError("'points' must be a list of strings")
    if "leq" in obj:
        pairs = obj["leq"]
        if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 for p in pairs
        ):
            raise TopologyError("'leq' must be a list of [x, y] pairs")
        return build_space(points, leq_pairs=[tuple(p) for p in pairs])
    if "opens" in obj:
        fam = obj["opens"]
        if not isinstance(fam, list):
            raise TopologyError("'opens' must be a list of point lists")
        return build_space(points, opens=[frozenset(u) for u in fam])
    raise TopologyError("space JSON needs 'leq' or 'opens'")


def load_space(path) -> FiniteSpace:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise TopologyError(f"cannot read space file {path}: {exc}") from exc
    return space_from_json(obj)


def step_path_to_json(path: StepPath) -> dict:
    return {
        "breakpoints": list(path.breakpoints),
        "intervals": list(path.intervals),
        "instants": list(path.instants),
    }


def step_path_from_json(obj: dict) -> StepPath:
    try:
        return StepPath(obj["breakpoints"], obj["intervals"], obj["instants"])
    except (KeyError, TypeError) as exc:
        raise ScenarioError(f"malformed step path JSON: {exc}") from exc
