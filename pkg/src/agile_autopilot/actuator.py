"""Second-order fin actuator with rate and position saturation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .integrate import rk4_step


@dataclass(frozen=True)
class ActuatorParams:
    omega: float = 180.0  # rad/s
    zeta: float = 0.7
    delta_limit: float = math.radians(30.0)
    rate_limit: float = math.radians(450.0)

    def __post_init__(self):
        if min(self.omega, self.zeta, self.delta_limit, self.rate_limit) <= 0:
            raise ConfigError("actuator parameters must be positive")


def actuator_derivative(delta, rate, delta_cmd, params: ActuatorParams):
    """(d delta/dt, d rate/dt); the position integrates the rate-limited velocity."""
    ddelta = max(-params.rate_limit, min(params.rate_limit, rate))
    drate = params.omega**2 * (delta_cmd - delta) - 2.0 * params.zeta * params.omega * rate
    return ddelta, drate


def apply_limits(delta, rate, params: ActuatorParams):
    """Rate clamp first, then position clamp; a fin pinned at a stop loses
    any velocity pushing it further out."""
    rate = max(-params.rate_limit, min(params.rate_limit, rate))
    if delta >= params.delta_limit:
        delta = params.delta_limit
        rate = min(rate, 0.0)
    elif delta <= -params.delta_limit:
        delta = -params.delta_limit
        rate = max(rate, 0.0)
    return delta, rate


def actuator_step(delta_cmd, dt, state, params: ActuatorParams = ActuatorParams()):
    """Advance (delta, rate) one RK4 step with the command held, then saturate."""
    def fn(_t, y):
        return actuator_derivative(y[0], y[1], delta_cmd, params)

    y = rk4_step(np.array(state, dtype=float), fn, 0.0, dt)
    return apply_limits(float(y[0]), float(y[1]), params)


class Actuator:
    def __init__(self, params: ActuatorParams = ActuatorParams(), delta0: float = 0.0):
        self.params = params
        self.delta, self.rate = apply_limits(delta0, 0.0, params)

    def step(self, delta_cmd: float, dt: float) -> tuple[float, float]:
        self.delta, self.rate = actuator_step(delta_cmd, dt, (self.delta, self.rate), self.params)
        return self.delta, self.rate
