import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from agile_autopilot.actuator import Actuator, ActuatorParams, actuator_step, apply_limits
from agile_autopilot.errors import ConfigError

P = ActuatorParams()
LIM = math.radians(30.0)
RATE = math.radians(450.0)


def closed_form_step(t, amp, omega=180.0, zeta=0.7):
    wd = omega * math.sqrt(1 - zeta**2)
    return amp * (1 - np.exp(-zeta * omega * t) * (np.cos(wd * t) + zeta / math.sqrt(1 - zeta**2) * np.sin(wd * t)))


def settling_time(t, y, final, band=0.02):
    out = np.flatnonzero(np.abs(y - final) > band * abs(final))
    return t[out[-1]] if out.size else 0.0


def simulate(cmds, dt, params=P, delta0=0.0):
    act = Actuator(params, delta0)
    return np.array([act.step(c, dt) for c in cmds])


def test_rest_stays_at_rest():
    out = simulate([0.0] * 100, 1e-3)
    assert np.all(out == 0.0)


def test_large_command_settles_at_stop():
    out = simulate([math.radians(60.0)] * 300, 1e-3)
    assert out[-1, 0] == LIM
    assert out[-1, 1] == 0.0
    assert np.all(np.abs(out[:, 0]) <= LIM)


def test_small_step_settling_matches_closed_form():
    dt = 1e-4
    amp = math.radians(5.0)
    n = 1000
    out = simulate([amp] * n, dt)
    t = np.arange(1, n + 1) * dt
    fine = np.linspace(0, n * dt, 200001)
    ts_ref = settling_time(fine, closed_form_step(fine, amp), amp)
    ts = settling_time(t, out[:, 0], amp)
    assert ts == pytest.approx(ts_ref, rel=0.10)
    assert 0.015 < ts_ref < 0.035  # roughly 4/(zeta*omega) = 31.7 ms order
    assert np.max(np.abs(out[:, 1])) < RATE  # a 5 deg step stays clear of the rate limit


def test_limits_hold_for_random_sequences():
    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.floats(-2.0, 2.0), min_size=1, max_size=200), st.sampled_from([1e-4, 1e-3, 5e-3]))
    def check(cmds, dt):
        out = simulate(cmds, dt)
        assert np.all(np.abs(out[:, 0]) <= LIM)
        assert np.all(np.abs(out[:, 1]) <= RATE)

    check()


def test_apply_limits_order():
    # rate clamp first, then a fin at the stop loses outward velocity
    assert apply_limits(0.6, 20.0, P) == (LIM, 0.0)
    assert apply_limits(0.6, -20.0, P) == (LIM, -RATE)
    assert apply_limits(0.1, 20.0, P) == (0.1, RATE)


def test_deterministic_output():
    rng = np.random.default_rng(3)
    cmds = rng.uniform(-1, 1, 500)
    a = simulate(cmds, 1e-3)
    b = simulate(cmds, 1e-3)
    assert a.tobytes() == b.tobytes()


def test_convergence_to_continuous_response():
    free = ActuatorParams(delta_limit=1e3, rate_limit=1e6)
    amp, t_end = math.radians(5.0), 0.03
    errors = []
    for dt in (1e-3, 5e-4):
        n = int(round(t_end / dt))
        out = simulate([amp] * n, dt, free)
        errors.append(abs(out[-1, 0] - closed_form_step(np.array(t_end), amp)))
    # at least second order; RK4 gives close to 16x
    assert errors[0] / errors[1] > 3.5


def test_single_step_function():
    d, r = actuator_step(0.1, 1e-3, (0.0, 0.0))
    assert 0 < d < 0.1 and r > 0


def test_params_validated():
    with pytest.raises(ConfigError):
        ActuatorParams(omega=-1.0)
