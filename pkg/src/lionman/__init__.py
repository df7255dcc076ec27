"""Pursuit-evasion strategies in the closed disk and in finite topological
spaces, with causal no-lookahead evaluation, adversarial falsification and
retraction-based strategy transfer."""

from .core import (
    CapturePredicate,
    EngineError,
    History,
    NoLookaheadReport,
    RecordedPath,
    Retraction,
    SampledPath,
    ScenarioError,
    TimeGrid,
    Trace,
    check_no_lookahead,
    compose_retractions,
    identity_retraction,
    lift_man_strategy,
    project_lion_strategy,
    run_match,
    trace_to_jsonl,
)
from .disk import (
    BesicovitchMan,
    BesiState,
    CircleSpace,
    DiskSpace,
    DomainError,
    FixedPointFreeMan,
    HausdorffLion,
    LiftState,
    SegmentSpace,
    SquareSpace,
    besicovitch_step,
    connect_path,
    lift_step,
    principal_angle,
    radial_retract,
    radial_retraction,
    vertical_edge_retraction,
)
from .finite import (
    AspaceLion,
    FalsifyResult,
    Fence,
    FiniteSpace,
    NoMinimumError,
    StepPath,
    TopologyError,
    build_space,
    dual,
    falsify_man_strategy,
    fence_between,
    fence_path,
    is_continuous,
    is_continuous_oracle,
    is_path_connected,
    open_hull,
    path_components,
    replay_strategy,
)

__version__ = "0.1.0"
