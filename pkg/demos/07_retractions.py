#!/usr/bin/env python3
"""Strategy transfer along retractions: evaders go up, pursuers come down.

r : X -> A restricting to the identity on A. An evader strategy on A lifts
to X by answering r(opponent); a pursuer strategy on X projects down to A
by retracting its outputs.
"""

from lionman import (
    HausdorffLion,
    SegmentSpace,
    SquareSpace,
    TimeGrid,
    connect_path,
    lift_man_strategy,
    project_lion_strategy,
    run_match,
)
from lionman.disk import vertical_edge_retraction
from lionman.fixtures import LaggedMapMan
from lionman.paths import random_edge_path, random_square_path

square = SquareSpace()
edge = SegmentSpace(0j, 1 + 0j)
r = vertical_edge_retraction(square, edge)
grid = TimeGrid(0.01, 1.5)

print("lifting an edge evader into the square:")
inner = LaggedMapMan(lambda p: complex(0.9 - 0.8 * p.real, 0.0), default=0.1 + 0j)
man = lift_man_strategy(r, inner)
lion = random_square_path(square, 5, 1.5)
trace = run_match(grid, lion, man, square, eval_mode="closed")
print(f"  pursuer roams the square; lifted evader captured: {trace.captured}")
print(f"  evader outputs stay on the edge: {all(m.imag == 0 for m in trace.man)}")

print("\nprojecting a square pursuer onto the edge:")
man_path = random_edge_path(square, 2, 1.5)
gamma = connect_path(square, complex(0.2, 0.9), man_path.at(0.0))
projected = project_lion_strategy(r, HausdorffLion(gamma))
trace = run_match(grid, projected, man_path, edge, eval_mode="closed")
print(f"  edge evader caught at t={trace.captured_at} by the projected pursuer")
