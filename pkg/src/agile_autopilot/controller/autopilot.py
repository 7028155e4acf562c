"""Angle-of-attack autopilot: command shaping, time-delay adaptation and
the two-step backstepping law, stepped once per control tick."""

from __future__ import annotations

from dataclasses import dataclass

from ..airframe.dynamics import Airframe, FlightCondition
from ..errors import ConfigError
from ..feedback_form import EFFECTIVENESS_FLOOR, eval_f1, eval_f2, eval_h2
from .backstepping import BacksteppingGains, TimeDelayEstimator, control_law, virtual_command
from .filters import SecondOrderFilter


@dataclass(frozen=True)
class ShapingParams:
    """Command shaper (omega, zeta) and the filter that differentiates the
    virtual command (omega_rate, zeta_rate)."""

    omega: float = 20.0
    zeta: float = 1.0
    omega_rate: float = 150.0
    zeta_rate: float = 1.0

    def __post_init__(self):
        if min(self.omega, self.zeta, self.omega_rate, self.zeta_rate) <= 0:
            raise ConfigError("shaping filter parameters must be positive")


@dataclass(frozen=True)
class Measurement:
    t: float
    alpha: float
    q: float
    speed: float
    mach: float
    qbar: float
    delta: float  # achieved fin deflection


@dataclass(frozen=True)
class ControllerOutput:
    delta_cmd: float
    x1d: float
    x1d_dot: float
    x2d: float
    x2d_dot: float
    z1: float
    z2: float
    d1_hat: float
    d2_hat: float
    d1_applied: float
    d2_applied: float
    f1: float
    f2: float
    h2: float


class AlphaAutopilot:
    """Sequential controller instance; not reentrant.

    With ``adaptation=False`` the estimator still runs (its output is
    reported) but the law is fed zero estimates.
    """

    def __init__(self, airframe: Airframe, gains: BacksteppingGains = BacksteppingGains(),
                 shaping: ShapingParams = ShapingParams(), adaptation: bool = True,
                 warmup_delays: float = 5.0, h2_floor: float = EFFECTIVENESS_FLOOR):
        self.airframe = airframe
        self.gains = gains
        self.shaping = shaping
        self.adaptation = adaptation
        self.warmup_delays = warmup_delays
        self.h2_floor = h2_floor
        self.reset()

    def reset(self) -> None:
        self.command_filter = SecondOrderFilter(self.shaping.omega, self.shaping.zeta)
        self.rate_filter = SecondOrderFilter(self.shaping.omega_rate, self.shaping.zeta_rate)
        self.estimator = TimeDelayEstimator(self.gains.tau_d)
        self.t0 = None

    def warmup_weight(self, t: float) -> float:
        span = self.warmup_delays * self.gains.tau_d
        if self.t0 is None or span <= 0:
            return 1.0
        return min(1.0, (t - self.t0) / span)

    def step(self, meas: Measurement, alpha_cmd: float, dt: float) -> ControllerOutput:
        aero = self.airframe.aero
        fc = FlightCondition(alpha=meas.alpha, q=meas.q, speed=meas.speed, mach=meas.mach,
                             qbar=meas.qbar, mass=self.airframe.mass(meas.t))
        f1 = eval_f1(fc, aero)
        f2 = eval_f2(fc, aero)
        h2 = eval_h2(fc, aero, floor=self.h2_floor)

        first = self.t0 is None
        if first:
            self.t0 = meas.t
            self.command_filter.reset(meas.alpha)
            x1d, x1d_dot = meas.alpha, 0.0
        else:
            x1d, x1d_dot, _ = self.command_filter.step(alpha_cmd, dt)

        raw1, raw2 = self.estimator.update(meas.alpha, meas.q, f1, f2, h2 * meas.delta, dt)
        w = self.warmup_weight(meas.t)
        d1_hat, d2_hat = w * raw1, w * raw2
        d1_used, d2_used = (d1_hat, d2_hat) if self.adaptation else (0.0, 0.0)

        z1 = meas.alpha - x1d
        x2d = virtual_command(f1, z1, x1d_dot, d1_used, self.gains)
        if first:
            self.rate_filter.reset(x2d)
            x2d_f, x2d_dot = x2d, 0.0
        else:
            x2d_f, x2d_dot, _ = self.rate_filter.step(x2d, dt)
        # filtered value and its derivative come from the same filter state
        z2 = meas.q - x2d_f
        u = control_law(f2, h2, z1, z2, x2d_dot, d2_used, self.gains)
        return ControllerOutput(
            delta_cmd=u, x1d=x1d, x1d_dot=x1d_dot, x2d=x2d, x2d_dot=x2d_dot, z1=z1, z2=z2,
            d1_hat=d1_hat, d2_hat=d2_hat, d1_applied=d1_used, d2_applied=d2_used,
            f1=f1, f2=f2, h2=h2,
        )
