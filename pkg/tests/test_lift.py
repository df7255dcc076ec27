"""Incremental angle lift vs the cumulative-argument (numpy unwrap) oracle."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lionman import LiftState, lift_step
from lionman.disk import DomainError, principal_angle


def lift_sequence(points):
    state = LiftState.initial()
    omegas = []
    for z in points:
        state = lift_step(state, z)
        omegas.append(state.omega if state.in_component else None)
    return state, omegas


def unwrap_oracle(points):
    """Independent lift: numpy unwrap on the raw angles, rebased to [0,1)."""
    ang = np.unwrap(np.angle(np.array(points))) / (2 * math.pi)
    ang -= math.floor(ang[0])
    return ang


def turns(vals):
    return [cmath.exp(2j * math.pi * a) for a in vals]


def test_constant_angle_stays_put():
    pts = turns([0.25] * 10)
    state, omegas = lift_sequence(pts)
    assert state.in_component
    assert abs(state.omega - 0.25) < 1e-12
    assert all(abs(o - 0.25) < 1e-12 for o in omegas)


def test_ten_steps_of_tenth_turn_reach_one():
    # principal argument returns to 0 but the lift counts the full winding
    pts = turns([0.1 * k for k in range(11)])
    state, _ = lift_sequence(pts)
    assert abs(state.omega - 1.0) < 1e-9
    assert abs(state.last_angle - 0.0) < 1e-12
    oracle = unwrap_oracle(pts)
    assert abs(oracle[-1] - state.omega) < 1e-9


def test_component_reset_on_origin():
    pts = turns([0.0, 0.4, 0.8, 1.2, 1.6, 2.0, 2.3])  # omega climbs to 2.3
    state, _ = lift_sequence(pts)
    assert abs(state.omega - 2.3) < 1e-9
    state = lift_step(state, 0j)  # origin closes the component
    assert not state.in_component
    state = lift_step(state, cmath.exp(2j * math.pi * 0.3))
    assert state.in_component
    assert abs(state.omega - 0.3) < 1e-12  # fresh base in [0, 1)


def test_first_value_in_unit_interval():
    for a in (0.0, 0.1, 0.5, 0.9, 0.999):
        state = lift_step(LiftState.initial(), cmath.exp(2j * math.pi * a))
        assert 0.0 <= state.omega < 1.0


def test_half_turn_tie_goes_positive():
    # antipodal consecutive samples: increment is exactly +1/2
    state = lift_step(LiftState.initial(), 1 + 0j)
    state = lift_step(state, -1 + 0j)
    assert abs(state.omega - 0.5) < 1e-12


def test_zero_threshold():
    st0 = lift_step(LiftState.initial(), complex(5e-13, 0.0))
    assert not st0.in_component  # below threshold counts as the origin


def test_principal_angle_domain():
    with pytest.raises(DomainError):
        principal_angle(0j)
    assert principal_angle(1 + 0j) == 0.0
    assert abs(principal_angle(-1 + 0j) - 0.5) < 1e-12
    assert abs(principal_angle(complex(0, -1)) - 0.75) < 1e-12


def test_omega_mod_one_matches_last_angle(rng):
    incs = rng.uniform(-0.45, 0.45, size=400)
    angs = np.cumsum(np.concatenate([[rng.uniform(0, 1)], incs]))
    pts = turns(angs)
    state, _ = lift_sequence(pts)
    assert abs((state.omega - state.last_angle) - round(state.omega - state.last_angle)) < 1e-9


def test_retraction_identity_of_lift(rng):
    # e^(2 pi i omega) equals the radial retraction of the current sample
    from lionman.disk import radial_retract

    incs = rng.uniform(-0.45, 0.45, size=300)
    angs = np.cumsum(np.concatenate([[0.37], incs]))
    radii = rng.uniform(0.2, 1.0, size=len(angs))
    pts = [r * z for r, z in zip(radii, turns(angs))]
    state = LiftState.initial()
    for z in pts:
        state = lift_step(state, z)
        lifted = cmath.exp(2j * math.pi * state.omega)
        assert abs(lifted - radial_retract(z)) < 1e-9


@settings(max_examples=300, deadline=None)
@given(
    base=st.floats(0.0, 1.0, exclude_max=True),
    incs=st.lists(st.floats(-0.49, 0.49), min_size=1, max_size=60),
)
def test_lift_agrees_with_unwrap_oracle(base, incs):
    angs = np.cumsum([base] + incs)
    pts = turns(angs)
    state, _ = lift_sequence(pts)
    oracle = unwrap_oracle(pts)
    assert abs(state.omega - oracle[-1]) < 1e-9


def test_integer_winding_exact(rng):
    # k full turns: final omega minus final principal angle is exactly k
    for k in (-3, -1, 1, 2, 5):
        n = 200
        angs = np.linspace(0.13, 0.13 + k, n)
        pts = turns(angs)
        state, _ = lift_sequence(pts)
        winding = state.omega - state.last_angle
        assert abs(winding - round(winding)) < 1e-9
        assert round(winding) == k
