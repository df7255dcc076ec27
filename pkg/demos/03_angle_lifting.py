#!/usr/bin/env python3
"""Incremental angle lifting: winding counts survive, origin crossings reset.

The lift tracks a continuous choice of argument along the pursuer's path,
one sample at a time, never looking ahead. Each passage through the origin
closes the component and the next one rebases into [0, 1).
"""

import cmath
import math

from lionman import LiftState, lift_step

print("two full turns, sampled forward only:")
state = LiftState.initial()
for k in range(41):
    a = 0.05 * k  # 0 .. 2 turns
    state = lift_step(state, cmath.exp(2j * math.pi * a))
print(f"  principal angle at the end: {state.last_angle:.3f} turns")
print(f"  lifted angle:               {state.omega:.3f} turns (winding kept)")

print("\ncrossing the origin resets the base:")
state = lift_step(state, 0j)
print(f"  after the origin: in_component={state.in_component}")
state = lift_step(state, cmath.exp(2j * math.pi * 0.8))
print(f"  next sample at 0.8 turns: omega={state.omega:.3f} (fresh base in [0,1))")

print("\nthe choice is canonical and history-only, so forking the future")
print("cannot change past values: that is the no-lookahead rule in action.")
