#!/usr/bin/env python3
"""A spiraling pursuer drives the boundary evader around the circle.

The evader sits at (1, 0) while the pursuer stays inside radius 1/2, then
sweeps along the boundary so that the moment the pursuer touches the rim,
the evader is exactly antipodal. Saves a picture when matplotlib is around.
"""

import math
import pathlib

from lionman import BesicovitchMan, DiskSpace, TimeGrid, run_match
from lionman.paths import spiral_path

grid = TimeGrid(0.002, 3.0)
lion = spiral_path(turns=1.25, reach_time=2.0)
trace = run_match(grid, lion, BesicovitchMan(), DiskSpace(), eval_mode="closed")

print(f"samples: {len(trace)}  captured: {trace.captured}")
print(f"closest approach: {trace.min_distance:.6f}")

for t in (0.0, 0.5, 1.0, 1.5, 2.0, 3.0):
    i = grid.index_of(t)
    l, m = trace.lion[i], trace.man[i]
    print(
        f"t={t:4.1f}  pursuer r={abs(l):.3f}  evader angle="
        f"{math.atan2(m.imag, m.real)/(2*math.pi)%1.0:.3f} turns  dist={abs(l-m):.3f}"
    )

i = grid.index_of(2.0)  # the pursuer reaches the rim here
l, m = trace.lion[i], trace.man[i]
print(f"\nat the rim: pursuer {l:.4f}, evader {m:.4f}, sum {abs(l+m):.2e} (antipodal)")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = pathlib.Path(__file__).parent / "out"
    out.mkdir(exist_ok=True)
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.add_patch(plt.Circle((0, 0), 1.0, fill=False, color="gray"))
    ax.plot([p.real for p in trace.lion], [p.imag for p in trace.lion], "r-", lw=0.8, label="pursuer")
    ax.plot([p.real for p in trace.man], [p.imag for p in trace.man], "b-", lw=1.2, label="evader")
    ax.set_aspect("equal")
    ax.legend()
    fig.savefig(out / "besicovitch_escape.png", dpi=120)
    print(f"figure: {out / 'besicovitch_escape.png'}")
except ImportError:
    pass
