#!/usr/bin/env python3
"""The finite-space pursuer: visit everything on a schedule, then mirror.

Phase 1 walks a path that visits the point enumeration y_n at the instants
t_n = 1 - 2^(-n). The first time the evader's sample lies in the minimal
open set of the scheduled point, the pursuer switches to mirroring the
evader's previous sample; any piecewise-constant evader is caught inside
one of its own constant pieces.
"""

from lionman import AspaceLion, StepPath, TimeGrid, build_space, run_match

zigzag = build_space(["a", "b", "c"], leq_pairs=[("a", "b"), ("c", "b")])
lion = AspaceLion(zigzag, "a")
grid = TimeGrid(1.0 / 16.0, 2.0, event_times=lion.event_times)

print("schedule (first 5):", [(round(t, 4), y) for t, y in lion.schedule[:5]])

man = StepPath([0.0, 0.5, 1.0], ["c", "a", "c"], ["c", "b", "b"])
trace = run_match(grid, lion, man, zigzag, eval_mode="closed")
print(f"\nzigzag evader with two jumps: captured at t={trace.captured_at}")
for t, l, m in zip(trace.times, trace.lion, trace.man):
    if t in (0.0, 0.25, 0.5, 0.75, 0.875, trace.captured_at):
        print(f"  t={t:7.4f}  pursuer={l}  evader={m}")

print("\nevery sitting evader is found: the enumeration revisits each point,")
print("and a sample inside U_y at the right instant triggers the mirror.")
