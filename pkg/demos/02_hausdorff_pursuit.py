#!/usr/bin/env python3
"""The two-phase pursuer: replay a path at double speed, then shadow the prey.

Against any recorded evader the pursuer's position at t = 1 equals the
evader's, so the match ends exactly on the t = 1 grid sample.
"""

from lionman import DiskSpace, HausdorffLion, TimeGrid, connect_path, run_match
from lionman.paths import random_man_disk_path

disk = DiskSpace()
grid = TimeGrid(0.01, 1.5)

for seed in (0, 1, 2):
    man = random_man_disk_path(seed, 1.5)
    gamma = connect_path(disk, 0j, man.at(0.0))
    trace = run_match(grid, HausdorffLion(gamma), man, disk, eval_mode="closed")
    print(f"seed {seed}: captured at t={trace.captured_at}  (samples: {len(trace)})")

man = random_man_disk_path(0, 1.5)
gamma = connect_path(disk, 0j, man.at(0.0))
trace = run_match(grid, HausdorffLion(gamma), man, disk, eval_mode="closed")
print("\nphase timeline (seed 0):")
for t in (0.0, 0.25, 0.5, 0.75, 0.9, 1.0):
    i = grid.index_of(t)
    l, m = trace.lion[i], trace.man[i]
    phase = "replay gamma(2t)" if t <= 0.5 else "shadow alpha(2t-1)"
    print(f"  t={t:4.2f}  {phase:20s}  gap={abs(l - m):.4f}")
