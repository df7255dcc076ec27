"""Retraction laws and strategy transfer along retractions."""

import pytest

from lionman import (
    HausdorffLion,
    SegmentSpace,
    TimeGrid,
    compose_retractions,
    connect_path,
    identity_retraction,
    lift_man_strategy,
    project_lion_strategy,
    run_match,
)
from lionman.core import Retraction
from lionman.disk import vertical_edge_retraction
from lionman.fixtures import LaggedMapMan
from lionman.paths import random_edge_path, random_man_disk_path, random_square_path


class EdgeMirrorMan:
    """Evader on the bottom edge mirroring across its midpoint (test-local:
    the map has a fixed point at 0.5, so the generic self-check would bar it)."""

    role = "man"

    def __init__(self):
        pass

    def reset(self):
        pass

    def move(self, t, history):
        latest = history.latest()
        x = 0.0 if latest is None else latest[1].real
        return complex(1.0 - x, 0.0)


def edge():
    return SegmentSpace(0j, 1 + 0j)


def test_roundtrip_law_identity(disk):
    r = identity_retraction(disk)
    assert r.check_roundtrip([0j, 0.3 + 0.4j, 1 + 0j])


def test_roundtrip_law_vertical(square):
    r = vertical_edge_retraction(square, edge())
    assert r.check_roundtrip([0j, 0.25 + 0j, 1 + 0j])
    assert r.retract(complex(0.3, 0.9)) == complex(0.3, 0.0)


def test_identity_lift_is_same_strategy(disk):
    from lionman import BesicovitchMan

    grid = TimeGrid(0.01, 1.5)
    lion = random_man_disk_path(5, 1.5)  # any recorded opponent
    base = run_match(grid, lion, BesicovitchMan(), disk, eval_mode="closed")
    lifted = lift_man_strategy(identity_retraction(disk), BesicovitchMan())
    same = run_match(grid, lion, lifted, disk, eval_mode="closed")
    assert base.man == same.man


def test_identity_project_is_same_strategy(disk):
    grid = TimeGrid(0.01, 1.25)
    man = random_man_disk_path(6, 1.25)
    gamma = connect_path(disk, 0j, man.at(0.0))
    base = run_match(grid, HausdorffLion(gamma), man, disk, eval_mode="closed")
    projected = project_lion_strategy(identity_retraction(disk), HausdorffLion(gamma))
    same = run_match(grid, projected, man, disk, eval_mode="closed")
    assert base.lion == same.lion and base.captured_at == same.captured_at


def test_lifted_edge_mirror_never_caught(square):
    """Square pursuers that avoid (0.5, 0) never reach the lifted mirror evader."""
    r = vertical_edge_retraction(square, edge())
    grid = TimeGrid(0.02, 2.0)
    for seed in range(100):
        lion = random_square_path(square, seed, 2.0)
        man = lift_man_strategy(r, EdgeMirrorMan())
        trace = run_match(grid, lion, man, square, eval_mode="closed")
        assert not trace.captured
        assert all(m.imag == 0.0 for m in trace.man)  # outputs stay in the subspace


def test_lift_composition_functorial(square):
    # r1: square -> bottom edge, r2: edge -> its left half
    e = edge()
    half = SegmentSpace(0j, 0.5 + 0j)
    r1 = vertical_edge_retraction(square, e)
    r2 = Retraction(source=e, target=half, retract=lambda p: complex(min(p.real, 0.5), 0.0))
    inner = LaggedMapMan(lambda p: complex(0.5 - p.real, 0.0), default=0.25 + 0j)

    grid = TimeGrid(0.05, 1.5)
    lion = random_square_path(square, 9, 1.5)
    two_step = lift_man_strategy(r1, lift_man_strategy(r2, inner))
    one_step = lift_man_strategy(compose_retractions(r2, r1), inner)
    t1 = run_match(grid, lion, two_step, square, eval_mode="closed")
    t2 = run_match(grid, lion, one_step, square, eval_mode="closed")
    assert t1.man == t2.man


def test_projected_hausdorff_captures_on_edge(square):
    """Lemma direction (b): big-space pursuer projects to a subspace pursuer."""
    e = edge()
    r = vertical_edge_retraction(square, e)
    grid = TimeGrid(0.01, 1.25)
    for seed in range(10):
        man = random_edge_path(square, seed, 1.25)
        gamma = connect_path(square, complex(0.2, 0.8), man.at(0.0))
        projected = project_lion_strategy(r, HausdorffLion(gamma))
        trace = run_match(grid, projected, man, e, eval_mode="closed")
        assert trace.captured_at == 1.0


def test_projected_capture_no_later(square):
    """Projection is 1-Lipschitz toward the edge: capture can only get earlier."""
    e = edge()
    r = vertical_edge_retraction(square, e)
    grid = TimeGrid(0.01, 1.25)
    for seed in range(5):
        man = random_edge_path(square, seed, 1.25)
        gamma = connect_path(square, complex(0.4, 0.9), man.at(0.0))
        inner = HausdorffLion(gamma)
        big = run_match(grid, HausdorffLion(gamma), man, square, eval_mode="closed")
        small = run_match(grid, project_lion_strategy(r, inner), man, e, eval_mode="closed")
        assert small.captured and big.captured
        assert small.captured_at <= big.captured_at

        # equality when the big strategy's outputs already lie in the subspace
        gamma_in_edge = connect_path(square, complex(0.9, 0.0), man.at(0.0))
        big2 = run_match(grid, HausdorffLion(gamma_in_edge), man, square, eval_mode="closed")
        small2 = run_match(
            grid, project_lion_strategy(r, HausdorffLion(gamma_in_edge)), man, e,
            eval_mode="closed",
        )
        assert small2.captured_at == big2.captured_at


def test_partial_retraction_error_propagates(disk, circle):
    """The radial retraction is undefined at 0: lifting through it must fail
    loudly when the pursuer reaches the origin (callers supply a total r)."""
    from lionman import BesicovitchMan, TimeGrid, run_match
    from lionman.disk import DomainError, radial_retraction
    from lionman.fixtures import LaggedMapMan
    from lionman.paths import segment_path

    r = radial_retraction(disk, circle)
    man = lift_man_strategy(r, LaggedMapMan(lambda z: -z, default=1 + 0j))
    lion = segment_path(disk, -0.5 + 0j, 0.5 + 0j)  # passes through 0 at t=1/2
    grid = TimeGrid(0.25, 1.0)
    with pytest.raises(DomainError):
        run_match(grid, lion, man, disk, eval_mode="closed")


def test_lift_requires_man_project_requires_lion(disk):
    from lionman import BesicovitchMan, ScenarioError

    with pytest.raises(ScenarioError):
        project_lion_strategy(identity_retraction(disk), BesicovitchMan())
    with pytest.raises(ScenarioError):
        lift_man_strategy(identity_retraction(disk), HausdorffLion(connect_path(disk, 0j, 1 + 0j)))
