#!/usr/bin/env python3
"""Finite topological spaces as preorders: opens, duals, hulls, step paths."""

from lionman import StepPath, build_space, dual, is_continuous, is_continuous_oracle, open_hull

sierpinski = build_space(["0", "1"], opens=[[], ["0"], ["0", "1"]])
print("Sierpinski space from its open sets:")
print(f"  0 <= 1: {sierpinski.leq('0', '1')}   U_1 = {sorted(sierpinski.minimal_open('1'))}")
print(f"  T0: {sierpinski.is_t0()}   minimum: {sierpinski.minimum()}")

chain = build_space(["a", "b", "c"], leq_pairs=[("a", "b"), ("b", "c")])
print("\n3-chain a <= b <= c:")
print(f"  opens: {sorted(tuple(sorted(u)) for u in chain.all_opens())}")
print(f"  open hull of {{c}}: {sorted(open_hull(chain, {'c'}))}")

d = dual(chain)
print(f"  dual reverses: c <= a in the dual? {d.leq('c', 'a')}")

print("\nstep paths and continuity:")
up = StepPath([0.0, 1.0], ["0", "1"], ["0", "1"])
print(f"  0 on [0,1), 1 at 1 and beyond: continuous = {is_continuous(sierpinski, up)}")
down = StepPath([0.0, 1.0], ["1", "0"], ["1", "0"])
print(f"  1 on [0,1), 0 at 1 and beyond: continuous = {is_continuous(sierpinski, down)}")
print("  (a jump is continuous only when both sides specialize to the instant)")

discrete = build_space(["x", "y"], leq_pairs=[])
glue = StepPath([0.0, 1.0], ["x", "y"], ["x", "y"])
print(f"  gluing two discrete points: direct={is_continuous(discrete, glue)}, "
      f"oracle={is_continuous_oracle(discrete, glue)}")
