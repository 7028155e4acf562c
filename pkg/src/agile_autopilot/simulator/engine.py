"""Fixed-step closed-loop simulation.

One clock drives everything: at each tick the controller sees the current
truth state, produces a fin command, and plant plus actuator are advanced
together by one RK4 step with that command held.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..actuator import ActuatorParams, actuator_derivative, apply_limits
from ..airframe import (
    Airframe,
    LongitudinalState,
    atmosphere,
    default_airframe,
    flight_condition,
    forces_moments,
    aero_coefficients,
    load_airframe,
    state_derivative,
    trim,
)
from ..controller import (
    AlphaAutopilot,
    BacksteppingGains,
    CommandBlender,
    Measurement,
    PIOuterGains,
    PIState,
    ShapingParams,
    blend_commands,
    pi_acceleration_loop,
)
from ..errors import AutopilotError
from ..feedback_form import UncertaintyConfig, strict_feedback_terms, truth_uncertainties
from ..integrate import rk4_step
from .config import ScenarioConfig
from .metrics import compute_metrics
from .profile import load_alpha_profile
from .telemetry import Telemetry


@dataclass
class ScenarioResult:
    config: ScenarioConfig
    telemetry: Telemetry
    metrics: dict = field(default_factory=dict)
    aborted: bool = False
    reason: str | None = None


class _Schedule:
    def __init__(self, pairs):
        arr = np.asarray(pairs, dtype=float)
        self.t, self.v = arr[:, 0], arr[:, 1]

    def __call__(self, t):
        return float(np.interp(t, self.t, self.v))


class CommandSource:
    """Produces the raw alpha command (and blend state) each tick."""

    def __init__(self, config: ScenarioConfig, alpha0: float):
        c = config.command
        k = config.controller
        self.kind = c.type
        self.alpha0 = alpha0
        self.step_value = math.radians(c.alpha_deg)
        self.t_step = c.t_step
        self.profile = load_alpha_profile(config.resolve_path(c.path)) if c.path else None
        self.lead = 2.0 * k.zeta_f / k.omega_f if c.preview else 0.0
        self.accel = _Schedule(c.schedule) if c.schedule else None
        self.pi_gains = PIOuterGains(k.kp, k.ki, math.radians(k.alpha_cmd_limit_deg))
        self.pi_state = PIState()
        self.blender = CommandBlender(k.blend_duration_s)
        self.exit_alpha = math.radians(k.turn_exit_alpha_deg)
        self.exit_heading = math.radians(k.turn_exit_heading_deg)
        if self.kind == "acceleration":
            self.blender.lam = 1.0
            self.blender.t_trigger = 0.0

    def __call__(self, t, alpha, heading_change, a_meas, dt):
        a_cmd = self.accel(t) if self.accel else math.nan
        if self.kind == "step":
            return (self.step_value if t >= self.t_step else self.alpha0), 0.0, a_cmd
        if self.kind == "profile":
            return self.profile(t + self.lead), 0.0, a_cmd
        inner = self.profile(t + self.lead) if self.profile else 0.0
        if self.kind == "agile_turn" and not self.blender.triggered:
            done = abs(alpha) < self.exit_alpha and abs(heading_change) >= self.exit_heading
            lam = self.blender.update(t, done)
        else:
            lam = self.blender.update(t, True)
        if self.blender.triggered:
            outer = pi_acceleration_loop(a_cmd, a_meas, dt, self.pi_gains, self.pi_state)
        else:
            outer = 0.0
        return blend_commands(inner, outer, lam), lam, a_cmd


def build_airframe(config: ScenarioConfig) -> Airframe:
    if config.airframe:
        return load_airframe(config.resolve_path(config.airframe))
    return default_airframe()


def build_uncertainty(config: ScenarioConfig, airframe: Airframe) -> UncertaintyConfig:
    u = config.uncertainty
    cfg = UncertaintyConfig(u.delta_pert, u.coupling_cn, u.coupling_cm, u.coupling, u.inject_h1)
    return cfg.resolved(airframe.aero) if u.coupling else cfg


def build_actuator(config: ScenarioConfig) -> ActuatorParams:
    a = config.actuator
    return ActuatorParams(a.omega, a.zeta, math.radians(a.delta_limit_deg),
                          math.radians(a.rate_limit_deg_s))


def build_autopilot(config: ScenarioConfig, airframe: Airframe) -> AlphaAutopilot:
    k = config.controller
    return AlphaAutopilot(
        airframe,
        gains=BacksteppingGains(k.k1, k.k2, k.tau_d),
        shaping=ShapingParams(k.omega_f, k.zeta_f, k.omega_rate, k.zeta_rate),
        adaptation=k.adaptation,
        warmup_delays=k.warmup_delays,
    )


def closed_loop_derivative(airframe, altitude, perturbation, act: ActuatorParams, delta_cmd):
    """Derivative of [u, w, q, theta, x, z, delta, delta_rate] with the fin command held."""

    def fn(t, y):
        u, w, q, theta = y[0], y[1], y[2], y[3]
        delta = max(-act.delta_limit, min(act.delta_limit, y[6]))
        st = LongitudinalState(u=u, w=w, q=q)
        du, dw, dq = state_derivative(st, delta, t, airframe, altitude, perturbation)
        ct, s = math.cos(theta), math.sin(theta)
        dd, ddr = actuator_derivative(y[6], y[7], delta_cmd, act)
        return (du, dw, dq, q, u * ct + w * s, -u * s + w * ct, dd, ddr)

    return fn


def run_scenario(config: ScenarioConfig) -> ScenarioResult:
    """Run the closed loop to ``t_final`` or until an abort condition.

    Aborts (envelope exit, divergence, loss of control effectiveness) return
    a result with ``aborted=True``, the reason, and telemetry up to the last
    completed tick.
    """
    config.validate()
    airframe = build_airframe(config)
    unc = build_uncertainty(config, airframe)
    act = build_actuator(config)
    autopilot = build_autopilot(config, airframe)
    altitude = config.initial.altitude
    dt = config.sim.dt
    n_steps = int(round(config.sim.t_final / dt))
    rng = np.random.default_rng(config.sim.seed)
    noise = config.sim
    aero = airframe.aero

    alpha0 = math.radians(config.initial.alpha_deg)
    q0 = math.radians(config.initial.q_deg_s)
    delta0 = 0.0
    if config.initial.trim:
        q0, delta0 = trim(airframe, config.initial.speed, alpha0, 0.0, altitude, unc)
    st0 = LongitudinalState.from_wind(config.initial.speed, alpha0, q=q0)
    delta0, _ = apply_limits(delta0, 0.0, act)
    y = np.array([st0.u, st0.w, st0.q, st0.theta, 0.0, 0.0, delta0, 0.0])
    source = CommandSource(config, alpha0)
    telemetry = Telemetry()
    heading0 = None

    result = ScenarioResult(config=config, telemetry=telemetry)
    try:
        for k in range(n_steps + 1):
            t = k * dt
            st = LongitudinalState(u=y[0], w=y[1], q=y[2], theta=y[3], x=y[4], z=y[5], t=t)
            delta, delta_rate = y[6], y[7]
            fc = flight_condition(st, t, airframe, altitude)
            nominal = strict_feedback_terms(fc, delta, aero)
            perturbed = strict_feedback_terms(fc, delta, aero, unc)
            d1, d2 = truth_uncertainties(nominal, perturbed, delta, unc.inject_h1)
            coeffs = unc.apply(aero_coefficients(fc.alpha, fc.mach, delta, fc.q, fc.speed,
                                                 fc.mass, aero, fin_forces=unc.inject_h1))
            _, fz, _ = forces_moments(coeffs, fc.qbar, aero)
            a_z = fz / fc.mass.m
            heading = st.theta - fc.alpha
            if heading0 is None:
                heading0 = heading

            alpha_m, q_m, a_n = fc.alpha, fc.q, -a_z
            if noise.noise_alpha_deg:
                alpha_m += math.radians(noise.noise_alpha_deg) * rng.standard_normal()
            if noise.noise_q_deg_s:
                q_m += math.radians(noise.noise_q_deg_s) * rng.standard_normal()
            if noise.noise_accel:
                a_n += noise.noise_accel * rng.standard_normal()

            alpha_cmd, lam, a_cmd = source(t, alpha_m, heading - heading0, a_n, dt)
            meas = Measurement(t=t, alpha=alpha_m, q=q_m, speed=fc.speed, mach=fc.mach,
                               qbar=fc.qbar, delta=delta)
            out = autopilot.step(meas, alpha_cmd, dt)
            telemetry.append((
                t, st.u, st.w, st.q, fc.alpha, fc.speed, fc.mach, fc.qbar,
                alpha_cmd, out.x1d, out.z1, out.z2, d1, d2, out.d1_hat, out.d2_hat,
                out.x2d, out.delta_cmd, delta, a_z, lam,
                delta_rate, st.theta, heading, st.x, st.z, a_cmd,
            ))
            if k == n_steps:
                break
            fn = closed_loop_derivative(airframe, altitude, unc, act, out.delta_cmd)
            y = rk4_step(y, fn, t, dt)
            y[6], y[7] = apply_limits(y[6], y[7], act)
    except AutopilotError as exc:
        result.aborted = True
        result.reason = f"{type(exc).__name__}: {exc}"

    if len(telemetry):
        result.metrics = compute_metrics(telemetry, config)
    result.metrics["aborted"] = result.aborted
    result.metrics["abort_reason"] = result.reason
    return result
