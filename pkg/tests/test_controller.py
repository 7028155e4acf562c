import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from agile_autopilot.controller import (
    BacksteppingGains,
    CommandBlender,
    LagChannel,
    PIOuterGains,
    PIState,
    SecondOrderFilter,
    TimeDelayEstimator,
    blend_commands,
    control_law,
    delay_filter,
    pi_acceleration_loop,
    residuals,
    shape_command,
    virtual_command,
)
from agile_autopilot.errors import ConfigError, ControlEffectivenessLossError

GAINS = BacksteppingGains()


# ---------------------------------------------------------------- shaping


def test_shaping_zero_input_stays_zero():
    f = SecondOrderFilter(20.0, 1.0)
    for _ in range(100):
        assert shape_command(0.0, 0.001, f) == (0.0, 0.0, 0.0)


def test_shaping_dc_gain():
    f = SecondOrderFilter(20.0, 0.8)
    for _ in range(5000):
        y, yd, ydd = shape_command(0.3, 0.001, f)
    assert y == pytest.approx(0.3, abs=1e-12)
    assert abs(yd) < 1e-10 and abs(ydd) < 1e-9


@pytest.mark.parametrize("omega", [20.0, 50.0])
def test_shaping_step_matches_closed_form(omega):
    # critically damped: y = 1 - (1 + w t) e^{-w t}
    dt = 1e-4
    f = SecondOrderFilter(omega, 1.0)
    err = 0.0
    for k in range(1, 4001):
        y, yd, ydd = f.step(1.0, dt)
        t = k * dt
        e = math.exp(-omega * t)
        err = max(err, abs(y - (1 - (1 + omega * t) * e)),
                  abs(yd - omega**2 * t * e) / omega,
                  abs(ydd - omega**2 * (1 - omega * t) * e) / omega**2)
    assert err < 1e-6


def test_shaping_underdamped_closed_form():
    w, z, dt = 30.0, 0.6, 1e-3
    wd = w * math.sqrt(1 - z * z)
    f = SecondOrderFilter(w, z)
    for k in range(1, 500):
        y, _, _ = f.step(1.0, dt)
        t = k * dt
        ref = 1 - math.exp(-z * w * t) * (math.cos(wd * t) + z * w / wd * math.sin(wd * t))
        assert y == pytest.approx(ref, abs=1e-12)


# ---------------------------------------------------------------- laws


def test_residuals():
    assert residuals(0.3, 1.0, 0.3, 1.0) == (0.0, 0.0)
    assert residuals(0.2, 0.0, 0.1, 0.0)[0] == pytest.approx(0.1)
    assert residuals(0.05, 0.0, 0.1, 0.0)[0] < 0


def test_virtual_command_cases():
    assert virtual_command(0.0, 0.0, 0.0, 0.0, GAINS) == 0.0
    assert virtual_command(0.0, 0.1, 0.0, 0.0, GAINS) == pytest.approx(-2.5)
    base = virtual_command(0.4, 0.02, 1.0, 0.0, GAINS)
    assert virtual_command(0.4, 0.02, 1.0, 0.7, GAINS) == pytest.approx(base - 0.7, abs=1e-15)


def test_control_law_cases():
    assert control_law(0.0, -50.0, 0.0, 0.0, 0.0, 0.0, GAINS) == 0.0
    assert control_law(0.0, -50.0, 0.0, 0.04, 0.0, 0.0, GAINS) == pytest.approx(0.02)
    u1 = control_law(3.0, -40.0, 0.1, 0.2, 1.0, 0.5, GAINS)
    assert control_law(3.0, -80.0, 0.1, 0.2, 1.0, 0.5, GAINS) == pytest.approx(u1 / 2)


def test_control_law_guards_effectiveness():
    with pytest.raises(ControlEffectivenessLossError):
        control_law(0.0, 0.0, 0.0, 0.1, 0.0, 0.0, GAINS)
    with pytest.raises(ControlEffectivenessLossError):
        control_law(0.0, 1e-4, 0.0, 0.1, 0.0, 0.0, GAINS, h2_floor=1e-3)


def test_gains_validated():
    with pytest.raises(ConfigError):
        BacksteppingGains(k1=0.0)


@given(st.floats(-10, 10), st.floats(-50, -1), st.floats(-1, 1), st.floats(-1, 1),
       st.floats(-5, 5), st.floats(-5, 5), st.floats(-5, 5))
def test_cross_term_cancels(f2, h2, z1, z2, x2d_dot, d2, d2_true):
    # ideal substitution: z2_dot = f2 + h2 u + d2_true - x2d_dot with d2_hat = d2_true
    u = control_law(f2, h2, z1, z2, x2d_dot, d2_true, GAINS)
    z2_dot = f2 + h2 * u + d2_true - x2d_dot
    assert z2_dot + z1 + GAINS.k2 * z2 == pytest.approx(0.0, abs=1e-9)


def test_ideal_residual_loop_lyapunov():
    # z1' = -K1 z1 + z2, z2' = -z1 - K2 z2, z(0) = (0.1, 0), exact matrix exponential
    from scipy.linalg import expm

    a = np.array([[-25.0, 1.0], [-1.0, -25.0]])
    dt = 1e-3
    phi = expm(a * dt)
    z = np.array([0.1, 0.0])
    v_prev = 0.5 * z @ z
    for k in range(1, 301):
        z = phi @ z
        v = 0.5 * z @ z
        assert v <= v_prev
        v_prev = v
        t = k * dt
        # closed form: z1 = 0.1 e^{-25t} cos t
        assert z[0] == pytest.approx(0.1 * math.exp(-25 * t) * math.cos(t), rel=1e-9, abs=1e-18)


# ---------------------------------------------------------------- delay filters


def test_lag_constant_input():
    y = 0.7
    for _ in range(1000):
        y = delay_filter(0.7, 0.001, 0.02, y)
    assert y == 0.7


def test_lag_step_closed_form():
    ch = LagChannel(0.02)
    ch.reset(0.0)
    for k in range(1, 301):
        ch.update(1.0, 0.001)
        assert ch.value == pytest.approx(1 - math.exp(-k * 0.001 / 0.02), abs=1e-13)


def test_lag_ramp_steady_lag():
    a, tau, dt = 3.0, 0.02, 1e-4
    ch = LagChannel(tau)
    ch.reset(0.0, rate=a)
    n = 4000
    for k in range(1, n + 1):
        ch.update(a * k * dt, dt)
    lag = a * n * dt - ch.value
    # exact sampled-lag value, which tends to a*tau as dt -> 0
    c = 1 - math.exp(-dt / tau)
    assert lag == pytest.approx(a * dt * (1 - c) / c, rel=1e-7)  # start transient ~e^-20
    assert lag == pytest.approx(a * tau, rel=0.01)
    assert ch.rate == pytest.approx(a, rel=1e-12)


def _replay(disturbance, n, dt=1e-3, f1=0.4, q=1.5, tau=0.02):
    """Exact alpha samples for alpha_dot = f1 + q + d(t) with constant f1, q."""
    est = TimeDelayEstimator(tau)
    out = []
    x1 = 0.0
    for k in range(n + 1):
        t = k * dt
        if k:
            x1 += (f1 + q) * dt + disturbance(t, dt)
        d1, _ = est.update(x1, q, f1, 0.0, 0.0, dt)
        out.append(d1)
    return np.array(out)


def test_estimator_constant_disturbance_is_a_lag():
    d, tau, dt = 0.8, 0.02, 1e-3
    est = _replay(lambda t, h: d * h, 200, dt=dt, tau=tau)
    t = np.arange(est.size) * dt
    assert np.allclose(est, d * (1 - np.exp(-t / tau)), atol=1e-12)
    k5 = int(round(5 * tau / dt))
    assert abs(est[k5] - d) <= d * math.exp(-5) + 1e-12


def test_estimator_ramp_disturbance_lag():
    a, tau, dt = 5.0, 0.02, 1e-3
    # increment of the integral of a*t over [t-h, t]
    est = _replay(lambda t, h: a * (t * t - (t - h) ** 2) / 2, 400, dt=dt, tau=tau)
    t = 400 * dt
    assert a * t - est[-1] == pytest.approx(a * tau, rel=0.02)


@settings(max_examples=50)
@given(st.lists(st.tuples(*[st.floats(-5, 5)] * 5), min_size=3, max_size=40))
def test_estimator_continuity(samples):
    dt, tau = 1e-3, 0.02
    c = 1 - math.exp(-dt / tau)
    est = TimeDelayEstimator(tau)
    prev = None
    prev_inputs = None
    for s in samples:
        chans = est.channels
        before = [ch.value for ch in chans] + [chans[0].rate, chans[1].rate]
        d = est.update(*s, dt)
        if prev is not None:
            x1, x2, f1, f2, h2u = s
            p = prev_inputs
            drives = [x1, x2, 0.5 * (f1 + p[2]), 0.5 * (f2 + p[3]), 0.5 * (h2u + p[4]),
                      0.5 * (x2 + p[1]), (x1 - p[0]) / dt, (x2 - p[1]) / dt]
            order = [0, 1, 2, 3, 4, 5, 6, 7]
            jumps = [abs(drives[i] - before[i]) for i in order]
            # every channel moves by c times its input gap; estimates combine three channels
            bound = c * (jumps[6] + jumps[2] + jumps[5]) + 1e-9
            assert abs(d[0] - prev[0]) <= bound
            bound2 = c * (jumps[7] + jumps[3] + jumps[4]) + 1e-9
            assert abs(d[1] - prev[1]) <= bound2
        prev, prev_inputs = d, s


def test_estimator_first_sample_is_zero():
    est = TimeDelayEstimator(0.02)
    assert est.update(0.3, 1.0, -0.4, 20.0, -35.0, 0.001) == (0.0, 0.0)


# ---------------------------------------------------------------- outer loop


def test_pi_zero_error():
    assert pi_acceleration_loop(0.0, 0.0, 0.01, PIOuterGains(), PIState()) == 0.0


def test_pi_unclamped_arithmetic_and_clamp():
    unclamped = PIOuterGains(alpha_limit=math.inf)
    state = PIState()
    for _ in range(100):
        out = pi_acceleration_loop(10.0, 0.0, 0.01, unclamped, state)
    assert out == pytest.approx(0.0098 * 10 + 0.34 * 10 * 1.0, rel=1e-12)
    assert out == pytest.approx(3.498, rel=1e-12)
    state = PIState()
    gains = PIOuterGains()
    for _ in range(100):
        out = pi_acceleration_loop(10.0, 0.0, 0.01, gains, state)
    assert out == pytest.approx(math.radians(50.0))
    assert gains.ki * state.integrator <= gains.alpha_limit + 1e-15


@given(st.lists(st.floats(-1e4, 1e4), min_size=1, max_size=50))
def test_pi_output_bounded(errors):
    gains, state = PIOuterGains(), PIState()
    for e in errors:
        out = pi_acceleration_loop(e, 0.0, 0.01, gains, state)
        assert abs(out) <= gains.alpha_limit
        assert abs(gains.ki * state.integrator) <= gains.alpha_limit * (1 + 1e-12)


def test_blend_cases():
    assert blend_commands(0.2, 0.4, 0.0) == 0.2
    assert blend_commands(0.2, 0.4, 1.0) == 0.4
    assert blend_commands(0.2, 0.4, 0.5) == pytest.approx(0.3)
    with pytest.raises(ValueError):
        blend_commands(0.2, 0.4, 1.5)


def test_blender_monotone_and_continuous():
    b = CommandBlender(0.2)
    lams = [b.update(k * 0.001, k >= 100 and k < 150) for k in range(600)]
    assert lams[99] == 0.0 and lams[-1] == 1.0
    assert all(b2 >= b1 for b1, b2 in zip(lams, lams[1:]))
    assert max(np.diff(lams)) <= 0.001 / 0.2 + 1e-12
    inner, outer = 0.5, -0.1
    cmds = [blend_commands(inner, outer, lam) for lam in lams]
    assert max(abs(np.diff(cmds))) <= abs(inner - outer) * 0.001 / 0.2 + 1e-12
