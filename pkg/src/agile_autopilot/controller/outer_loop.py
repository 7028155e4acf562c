"""PI acceleration loop wrapped around the angle-of-attack autopilot, and
the command blend used to hand over from alpha to acceleration control."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PIOuterGains:
    kp: float = 0.0098  # rad per m/s^2
    ki: float = 0.34  # rad per m/s
    alpha_limit: float = math.radians(50.0)


@dataclass
class PIState:
    integrator: float = 0.0


def _clamp(x, lim):
    return max(-lim, min(lim, x))


def pi_acceleration_loop(a_cmd, a_meas, dt, gains: PIOuterGains, state: PIState) -> float:
    """Angle-of-attack command from the normal-acceleration error.

    The integrator is clamped so ``ki * integrator`` never exceeds the
    alpha-command limit, and the output is clamped to the same limit.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    err = a_cmd - a_meas
    state.integrator += err * dt
    if gains.ki > 0 and math.isfinite(gains.alpha_limit):
        state.integrator = _clamp(state.integrator, gains.alpha_limit / gains.ki)
    return _clamp(gains.kp * err + gains.ki * state.integrator, gains.alpha_limit)


def blend_commands(alpha_inner, alpha_pi, lam):
    if not 0.0 <= lam <= 1.0:
        raise ValueError("blend factor must lie in [0, 1]")
    return (1.0 - lam) * alpha_inner + lam * alpha_pi


class CommandBlender:
    """Blend factor that ramps 0 -> 1 linearly once triggered, never backwards."""

    def __init__(self, duration: float):
        if duration < 0:
            raise ValueError("blend duration must be non-negative")
        self.duration = duration
        self.lam = 0.0
        self.t_trigger = None

    @property
    def triggered(self) -> bool:
        return self.t_trigger is not None

    def update(self, t: float, exit_condition: bool) -> float:
        if self.t_trigger is None and exit_condition:
            self.t_trigger = t
        if self.t_trigger is not None:
            if self.duration == 0:
                self.lam = 1.0
            else:
                self.lam = min(1.0, max(self.lam, (t - self.t_trigger) / self.duration))
        return self.lam
