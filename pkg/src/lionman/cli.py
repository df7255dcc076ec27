"""Command-line front end.

Subcommands: ``simulate`` (run a scenario, write a JSONL trace), ``check``
(causality / no-lookahead report), ``falsify`` (defeating pursuer path in a
space with a minimum), ``space`` (topology predicates and the dual), and
``serve`` (live-play session service).

Exit codes: 0 success, 2 invalid scenario or malformed input, 3 runtime
contract violation, 4 causality failure, 5 no minimum point.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import paths as pathgen
from .core import (
    CapturePredicate,
    EngineError,
    RecordedPath,
    SampledPath,
    ScenarioError,
    TimeGrid,
    check_no_lookahead,
    run_match,
    trace_to_jsonl,
)
from .disk import (
    BesicovitchMan,
    CircleSpace,
    DiskSpace,
    FixedPointFreeMan,
    HausdorffLion,
    SquareSpace,
    connect_path,
)
from .finite import (
    AspaceLion,
    FiniteSpace,
    NoMinimumError,
    StepPath,
    TopologyError,
    dual,
    falsify_man_strategy,
    is_path_connected,
    load_space,
    space_to_json,
    step_path_from_json,
    step_path_to_json,
)
from .fixtures import ClairvoyantMan, MirrorMan, SitMan, falsifier_fixture_suite

EXIT_OK = 0
EXIT_SCENARIO = 2
EXIT_CONTRACT = 3
EXIT_CAUSALITY = 4
EXIT_NO_MINIMUM = 5

CONTINUUM_SPACES = {"disk": DiskSpace, "circle": CircleSpace, "square": SquareSpace}

DEFAULT_STARTS = {
    "disk": (0j, 1 + 0j),
    "circle": (1 + 0j, -1 + 0j),
    "square": (0j, 1 + 0j),
}


# ---------------------------------------------------------------------------
# Scenario parsing


class Scenario:
    """Fully resolved scenario: space, grid parameters, both players, seed."""

    def __init__(self, obj: dict, base_dir: Path):
        if not isinstance(obj, dict):
            raise ScenarioError("scenario must be a JSON object")
        self.base_dir = base_dir
        self.seed = int(obj.get("seed", 0))
        self.space_kind, self.space = self._parse_space(obj.get("space", "disk"))
        grid = obj.get("grid")
        if not isinstance(grid, dict) or "dt" not in grid or "horizon" not in grid:
            raise ScenarioError("scenario needs grid: {dt, horizon}")
        self.dt = float(grid["dt"])
        self.horizon = float(grid["horizon"])
        self.extra_events = tuple(float(t) for t in grid.get("event_times", ()))

        self.lion_start = self._parse_point(obj.get("lion_start"))
        self.man_start = self._parse_point(obj.get("man_start"))
        if self.lion_start is None or self.man_start is None:
            if isinstance(self.space, FiniteSpace):
                pts = sorted(self.space.points)
                self.lion_start = self.lion_start or pts[0]
                self.man_start = self.man_start or pts[-1]
            else:
                dl, dm = DEFAULT_STARTS[self.space_kind]
                self.lion_start = self.lion_start if self.lion_start is not None else dl
                self.man_start = self.man_start if self.man_start is not None else dm

        if "lion" not in obj or "man" not in obj:
            raise ScenarioError("scenario needs lion and man player specs")
        self.lion = self._parse_player(obj["lion"], "lion")
        self.man = self._parse_player(obj["man"], "man")
        n_recorded = sum(isinstance(p, RecordedPath) for p in (self.lion, self.man))
        if n_recorded == 2:
            raise ScenarioError("at most one player may be a recorded path")

        tol = obj.get("capture_tolerance")
        if tol is None:
            self.capture = CapturePredicate.default_for(self.space)
        else:
            tol = float(tol)
            self.capture = CapturePredicate(None if tol == 0.0 else tol)
        self.eval_mode = obj.get("eval_mode")
        if self.eval_mode not in (None, "strict", "closed"):
            raise ScenarioError(f"bad eval_mode {self.eval_mode!r}")

    # -- helpers ------------------------------------------------------------

    def _parse_space(self, spec):
        if isinstance(spec, str):
            if spec not in CONTINUUM_SPACES:
                raise ScenarioError(f"unknown space {spec!r}")
            return spec, CONTINUUM_SPACES[spec]()
        if isinstance(spec, dict) and "file" in spec:
            return "finite", load_space(self.base_dir / spec["file"])
        raise ScenarioError(f"bad space spec {spec!r}")

    def _parse_point(self, obj):
        if obj is None:
            return None
        return self.space.point_from_json(obj)

    def _rng(self, salt: int = 0) -> np.random.Generator:
        return np.random.default_rng((self.seed, salt))

    def _parse_path(self, spec) -> RecordedPath:
        if isinstance(spec, dict) and "file" in spec and "kind" not in spec:
            spec = {**spec, "kind": "step"}
        if not isinstance(spec, dict) or "kind" not in spec:
            raise ScenarioError(f"bad path spec {spec!r}")
        kind = spec["kind"]
        finite = isinstance(self.space, FiniteSpace)
        if kind == "constant":
            return pathgen.constant_path(self.space.point_from_json(spec["at"]))
        if finite:
            if kind == "step":
                if "file" in spec:
                    try:
                        with open(self.base_dir / spec["file"]) as fh:
                            spec = json.load(fh)
                    except (OSError, json.JSONDecodeError) as exc:
                        raise ScenarioError(f"cannot read step path: {exc}") from exc
                path = step_path_from_json(spec)
                for v in path.values():
                    if not self.space.contains(v):
                        raise ScenarioError(f"step path uses unknown point {v!r}")
                return path
            raise ScenarioError(f"unsupported finite-space path kind {kind!r}")
        if kind == "segment":
            a = self.space.point_from_json(spec["from"])
            b = self.space.point_from_json(spec["to"])
            return pathgen.segment_path(
                self.space, a, b, float(spec.get("t0", 0.0)), float(spec.get("t1", 1.0))
            )
        if kind == "spiral":
            return pathgen.spiral_path(
                float(spec.get("turns", 1.0)),
                reach_time=float(spec.get("reach_time", 1.0)),
                start_angle=float(spec.get("start_angle", 0.0)),
                hold=bool(spec.get("hold", True)),
            )
        if kind == "spline":
            if self.space_kind == "square":
                return pathgen.random_square_path(
                    self.space, int(spec.get("seed", self.seed)), self.horizon
                )
            return pathgen.spline_path(
                np.random.default_rng(int(spec.get("seed", self.seed))), self.horizon
            )
        if kind == "origin_crossing":
            return pathgen.origin_crossing_path(
                np.random.default_rng(int(spec.get("seed", self.seed))), self.horizon
            )
        if kind == "random":
            seed = int(spec.get("seed", self.seed))
            if self.space_kind == "circle":
                return pathgen.random_circle_path(seed, self.horizon)
            if self.space_kind == "square":
                return pathgen.random_square_path(self.space, seed, self.horizon)
            return pathgen.random_disk_path(seed, self.horizon)
        if kind == "samples":
            if "file" in spec:
                try:
                    with open(self.base_dir / spec["file"]) as fh:
                        spec = json.load(fh)
                except (OSError, json.JSONDecodeError) as exc:
                    raise ScenarioError(f"cannot read samples: {exc}") from exc
            times = spec.get("times")
            points = spec.get("points")
            if not times or not points:
                raise ScenarioError("samples path needs times and points")
            return SampledPath(
                self.space, times, [self.space.point_from_json(p) for p in points]
            )
        raise ScenarioError(f"unknown path kind {kind!r}")

    def _parse_player(self, spec, who: str):
        if not isinstance(spec, dict):
            raise ScenarioError(f"bad {who} spec {spec!r}")
        if ("path" in spec) == ("strategy" in spec):
            raise ScenarioError(f"{who} spec needs exactly one of 'strategy' / 'path'")
        if "path" in spec:
            return self._parse_path(spec["path"])
        name = spec["strategy"]
        params = spec.get("params", {})
        finite = isinstance(self.space, FiniteSpace)
        if name == "besicovitch":
            if who != "man" or finite:
                raise ScenarioError("besicovitch is a continuum man strategy")
            return BesicovitchMan()
        if name == "hausdorff":
            if who != "lion" or finite:
                raise ScenarioError("hausdorff is a continuum lion strategy")
            if "gamma" in params:
                gamma = self._parse_path(params["gamma"])
            else:
                gamma = connect_path(self.space, self.lion_start, self.man_start)
            return HausdorffLion(gamma)
        if name == "fixed_point_free":
            if who != "man" or finite:
                raise ScenarioError("fixed_point_free is a continuum man strategy")
            kind = params.get("map", "antipodal")
            if kind == "antipodal":
                f = lambda z: -z  # noqa: E731
            elif kind == "rotation":
                turns = float(params.get("turns", 1.0 / 3.0))
                import cmath

                w = cmath.exp(2j * cmath.pi * turns)
                f = lambda z: w * z  # noqa: E731
            else:
                raise ScenarioError(f"unknown map {kind!r}")
            return FixedPointFreeMan(f, self.space, self.lion_start)
        if name == "aspace":
            if who != "lion" or not finite:
                raise ScenarioError("aspace is a finite-space lion strategy")
            return AspaceLion(self.space, self.lion_start, int(params.get("n_events", 24)))
        if name == "sit":
            at = params.get("at")
            point = self.man_start if at is None else self.space.point_from_json(at)
            return SitMan(point)
        if name == "mirror":
            return MirrorMan(default=self.man_start)
        if name == "clairvoyant":
            transform = None
            if params.get("transform") == "antipodal":
                transform = lambda z: -z  # noqa: E731
            return ClairvoyantMan(transform)
        raise ScenarioError(f"unknown strategy {name!r}")

    def build_grid(self) -> TimeGrid:
        events = list(self.extra_events)
        for player in (self.lion, self.man):
            events.extend(getattr(player, "event_times", ()))
        return TimeGrid(self.dt, self.horizon, tuple(events))


def load_scenario(path: str) -> Scenario:
    p = Path(path)
    try:
        with open(p) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ScenarioError(f"cannot read scenario {path}: {exc}") from exc
    return Scenario(obj, p.parent)


# ---------------------------------------------------------------------------
# Commands


def cmd_simulate(args) -> int:
    scenario = load_scenario(args.scenario)
    grid = scenario.build_grid()
    trace = run_match(
        grid,
        scenario.lion,
        scenario.man,
        scenario.space,
        capture=scenario.capture,
        eval_mode=scenario.eval_mode,
    )
    if args.out:
        Path(args.out).write_text(trace_to_jsonl(trace))
    if trace.captured:
        print(f"captured at t={trace.captured_at}")
    elif trace.min_distance is not None:
        print(f"escaped, min_dist={trace.min_distance}")
    else:
        print("escaped")
    return EXIT_OK


def _fork_generator(scenario: Scenario, grid: TimeGrid, seed: int):
    """Seeded continuations diverging at the fork time."""
    space = scenario.space

    def gen(base: RecordedPath, tf: float) -> RecordedPath:
        rng = np.random.default_rng((seed, int(tf / grid.dt + 0.5)))
        if isinstance(space, FiniteSpace):
            before = [(t, base.at(t)) for t in grid.times if t < tf - 1e-12]
            v_before = before[-1][1] if before else base.at(0.0)
            others = [p for p in space.points if space.comparable(p, v_before) and p != v_before]
            if not others:
                return base
            y = others[rng.integers(len(others))]
            w = y if space.leq(v_before, y) else v_before
            bp = [0.0] + [t for t, _ in before[1:]] + [tf]
            iv = [p for _, p in before] + [y]
            iw = [before[0][1]] + [p for _, p in before[1:]] + [w]
            return StepPath(bp, iv, iw)
        alt = _random_continuum_path(scenario, rng)
        times = list(grid.times)
        pts = [base.at(t) if t < tf - 1e-12 else alt.at(t) for t in times]
        return SampledPath(space, times, pts)

    return gen


def _random_continuum_path(scenario: Scenario, rng: np.random.Generator) -> RecordedPath:
    seed = int(rng.integers(0, 2**31))
    if scenario.space_kind == "circle":
        return pathgen.random_circle_path(seed, scenario.horizon)
    if scenario.space_kind == "square":
        return pathgen.random_square_path(scenario.space, seed, scenario.horizon)
    return pathgen.random_disk_path(seed, scenario.horizon)


def cmd_check(args) -> int:
    scenario = load_scenario(args.scenario)
    grid = scenario.build_grid()
    lion_rec = isinstance(scenario.lion, RecordedPath)
    man_rec = isinstance(scenario.man, RecordedPath)
    if lion_rec == man_rec:
        raise ScenarioError("check needs exactly one strategy and one recorded path")
    strategy = scenario.man if lion_rec else scenario.lion
    base = scenario.lion if lion_rec else scenario.man

    rng = np.random.default_rng(args.seed)
    candidates = [t for t in grid.times if 0.0 < t < grid.times[-1]]
    n = min(args.forks, len(candidates))
    fork_times = sorted(
        candidates[i] for i in rng.choice(len(candidates), size=n, replace=False)
    ) if n else []

    mode = scenario.eval_mode or "closed"
    report = check_no_lookahead(
        grid,
        scenario.space,
        strategy,
        base,
        fork_times,
        _fork_generator(scenario, grid, args.seed),
        eval_mode=mode,
        capture=scenario.capture,
    )
    if report.passed:
        print(f"no-lookahead: pass ({report.forks_checked} forks, {mode} mode)")
        return EXIT_OK
    d = report.first_divergence
    print(
        "no-lookahead: FAIL "
        f"(fork at t={d['fork_time']}, divergence at t={d['sample_time']}: "
        f"{d['base']!r} vs {d['fork']!r})"
    )
    return EXIT_CAUSALITY


def cmd_falsify(args) -> int:
    space = load_space(args.space)
    suite = falsifier_fixture_suite(space)
    if args.man not in suite:
        raise ScenarioError(f"unknown man fixture {args.man!r} (have: {sorted(suite)})")
    start = args.start if args.start else sorted(space.points)[-1]
    result = falsify_man_strategy(space, start, suite[args.man], dt=args.dt)
    out = args.out or "beta_prime.json"
    Path(out).write_text(json.dumps(step_path_to_json(result.beta_prime), indent=2) + "\n")
    print(f"capture at t={result.capture_time}")
    if not result.verified:
        print(f"causality violation: {result.causality_violation}")
        return EXIT_CAUSALITY
    print(f"defeating path written to {out}; replay confirms coincidence at t=1")
    return EXIT_OK


def cmd_space(args) -> int:
    space = load_space(args.space)
    if args.check == "t0":
        print(f"t0: {str(space.is_t0()).lower()}")
    elif args.check == "connected":
        print(f"connected: {str(is_path_connected(space)).lower()}")
    else:  # dual
        out = args.out or str(Path(args.space).with_suffix("")) + ".dual.json"
        Path(out).write_text(json.dumps(space_to_json(dual(space)), indent=2) + "\n")
        print(f"dual written to {out}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import ServiceSettings, create_app

    settings = ServiceSettings(
        dt=args.dt,
        speed_cap=args.speed_cap,
        tolerance=args.tolerance,
        static_dir=args.static,
    )
    uvicorn.run(create_app(settings), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lionman", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a scenario and write its trace")
    p.add_argument("scenario")
    p.add_argument("--out", help="trace output file (JSONL)")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("check", help="no-lookahead causality report")
    p.add_argument("scenario")
    p.add_argument("--forks", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("falsify", help="defeat a man strategy in a space with a minimum")
    p.add_argument("space")
    p.add_argument("man", help="fixture name (sit_top, sit_bottom, mirror, cycle_map, delay2)")
    p.add_argument("--start", help="lion start point (default: lexicographically last)")
    p.add_argument("--dt", type=float, default=1.0 / 16.0)
    p.add_argument("--out", help="defeating step-path output file")
    p.set_defaults(fn=cmd_falsify)

    p = sub.add_parser("space", help="topology predicates / dual of a space file")
    p.add_argument("space")
    p.add_argument("--check", choices=["t0", "connected", "dual"], required=True)
    p.add_argument("--out", help="output file for --check dual")
    p.set_defaults(fn=cmd_space)

    p = sub.add_parser("serve", help="start the live-play session service")
    p.add_argument("--host", default=os.environ.get("LIONMAN_HOST", "127.0.0.1"))
    p.add_argument("--port", type=int, default=int(os.environ.get("LIONMAN_PORT", "8000")))
    p.add_argument("--dt", type=float, default=float(os.environ.get("LIONMAN_DT", str(1.0 / 60.0))))
    p.add_argument(
        "--speed-cap",
        type=float,
        default=float(os.environ["LIONMAN_SPEED_CAP"]) if "LIONMAN_SPEED_CAP" in os.environ else None,
    )
    p.add_argument(
        "--tolerance", type=float, default=float(os.environ.get("LIONMAN_TOLERANCE", "1e-9"))
    )
    p.add_argument("--static", default=os.environ.get("LIONMAN_STATIC"))
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NoMinimumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_MINIMUM
    except (ScenarioError, TopologyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCENARIO
    except EngineError as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
