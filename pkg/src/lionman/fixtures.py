"""Test-fixture strategies: honest causal baselines and adversarial cheats.

The clairvoyant fixture exists to FAIL causality checks: run_match grants
strategies flagged ``peeks_ahead`` the full recorded opponent path, and the
fixture reads one grid sample into the future. Everything else here is
strictly causal (outputs depend on strictly-earlier opponent samples only,
which is the right discipline for finite spaces where the current sample is
not determined by the history).
"""

from __future__ import annotations

from .core import History, TimeGrid

__all__ = [
    "ClairvoyantMan",
    "SitMan",
    "MirrorMan",
    "LaggedMapMan",
    "DelayMan",
    "falsifier_fixture_suite",
]


class ClairvoyantMan:
    """Cheating evader: emits a function of the opponent's NEXT grid sample.

    Built to violate the no-lookahead rule; check_no_lookahead must fail it
    at the first fork. ``transform`` post-processes the peeked sample so the
    output stays inside the space (e.g. the antipodal map on the disk).
    """

    role = "man"
    peeks_ahead = True

    def __init__(self, transform=None):
        self.transform = transform if transform is not None else (lambda z: z)
        self._path = None
        self._grid = None

    def attach_opponent_path(self, path, grid: TimeGrid):
        self._path = path
        self._grid = grid

    def reset(self):
        pass

    def move(self, t, history: History):
        times = self._grid.times
        i = self._grid.index_of(t)
        t_next = times[min(i + 1, len(times) - 1)]
        return self.transform(self._path.at(t_next))


class SitMan:
    """Evader that never moves."""

    role = "man"

    def __init__(self, point):
        self.point = point

    def reset(self):
        pass

    def move(self, t, history):
        return self.point


class MirrorMan:
    """Evader copying the opponent's most recent strictly-earlier sample."""

    role = "man"

    def __init__(self, default):
        self.default = default

    def reset(self):
        pass

    def move(self, t, history: History):
        prev = history.latest_strictly_before(t)
        return self.default if prev is None else prev[1]


class LaggedMapMan:
    """Evader applying a point map to the strictly-earlier opponent sample."""

    role = "man"

    def __init__(self, f, default):
        self.f = f
        self.default = default

    def reset(self):
        pass

    def move(self, t, history: History):
        prev = history.latest_strictly_before(t)
        return self.f(self.default if prev is None else prev[1])


class DelayMan:
    """Evader replaying the opponent sample from ``delay`` visible steps ago."""

    role = "man"

    def __init__(self, delay: int, default):
        if delay < 1:
            raise ValueError("delay must be >= 1")
        self.delay = delay
        self.default = default

    def reset(self):
        pass

    def move(self, t, history: History):
        # count only samples strictly before t, so closed mode stays causal
        n = len(history)
        while n > 0 and history.time(n - 1) >= t - 1e-12:
            n -= 1
        i = n - self.delay
        return self.default if i < 0 else history.position(i)


def falsifier_fixture_suite(space):
    """The standard causal man fixtures for a finite space."""
    pts = sorted(space.points)
    top, bottom = pts[-1], pts[0]
    cycle = {p: pts[(i + 1) % len(pts)] for i, p in enumerate(pts)}
    return {
        "sit_top": SitMan(top),
        "sit_bottom": SitMan(bottom),
        "mirror": MirrorMan(default=top),
        "cycle_map": LaggedMapMan(lambda p: cycle[p], default=top),
        "delay2": DelayMan(2, default=top),
    }
