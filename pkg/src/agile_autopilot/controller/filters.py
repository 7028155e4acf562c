"""Discrete filters used by the autopilot: the single-lag delay realization
and the second-order command-shaping filter."""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm


def lag_gain(dt: float, tau: float) -> float:
    if dt <= 0 or tau <= 0:
        raise ValueError("dt and tau must be positive")
    return -math.expm1(-dt / tau)


def delay_filter(x: float, dt: float, tau: float, y: float) -> float:
    """One exact (zero-order-hold) step of the lag 1/(tau s + 1).

    The output approximates ``x(t - tau)`` for slowly varying ``x``.
    """
    return y + lag_gain(dt, tau) * (x - y)


class LagChannel:
    """A delayed signal together with the rate of the delayed signal.

    ``rate`` is the same lag applied to the backward difference of the
    input, which equals the derivative of the lag output without
    differentiating the raw signal twice. It is seeded explicitly on the
    first sample.
    """

    __slots__ = ("tau", "value", "rate", "_prev")

    def __init__(self, tau: float):
        if tau <= 0:
            raise ValueError("tau must be positive")
        self.tau = tau
        self.value = None
        self.rate = 0.0
        self._prev = None

    @property
    def initialized(self) -> bool:
        return self.value is not None

    def reset(self, x: float, rate: float = 0.0) -> None:
        self.value = x
        self.rate = rate
        self._prev = x

    def update(self, x: float, dt: float) -> float:
        if self.value is None:
            self.reset(x)
            return self.value
        c = lag_gain(dt, self.tau)
        self.rate += c * ((x - self._prev) / dt - self.rate)
        self.value += c * (x - self.value)
        self._prev = x
        return self.value


class SecondOrderFilter:
    """Unit-DC-gain second-order low-pass, omega^2 / (s^2 + 2 zeta omega s + omega^2).

    Discretized exactly for a piecewise-constant input. ``step`` returns the
    filtered signal and its first two derivatives, all taken from the
    filter's own state.
    """

    def __init__(self, omega: float, zeta: float, y0: float = 0.0):
        if omega <= 0 or zeta <= 0:
            raise ValueError("omega and zeta must be positive")
        self.omega = omega
        self.zeta = zeta
        self.y = y0
        self.ydot = 0.0
        self._cache = None

    def reset(self, y0: float, ydot0: float = 0.0) -> None:
        self.y, self.ydot = y0, ydot0

    def _matrices(self, dt: float):
        if self._cache is None or self._cache[0] != dt:
            w, z = self.omega, self.zeta
            aug = np.zeros((3, 3))
            aug[0, 1] = 1.0
            aug[1, 0] = -w * w
            aug[1, 1] = -2 * z * w
            aug[1, 2] = w * w
            e = expm(aug * dt)
            self._cache = (dt, e[:2, :2].tolist(), e[:2, 2].tolist())
        return self._cache[1], self._cache[2]

    def accel(self, r: float) -> float:
        return self.omega**2 * (r - self.y) - 2 * self.zeta * self.omega * self.ydot

    def step(self, r: float, dt: float) -> tuple[float, float, float]:
        if dt <= 0:
            raise ValueError("dt must be positive")
        phi, gamma = self._matrices(dt)
        (p00, p01), (p10, p11) = phi
        g0, g1 = gamma
        y, yd = self.y, self.ydot
        self.y = p00 * y + p01 * yd + g0 * r
        self.ydot = p10 * y + p11 * yd + g1 * r
        return self.y, self.ydot, self.accel(r)


def shape_command(raw_cmd: float, dt: float, filter_state: SecondOrderFilter) -> tuple[float, float, float]:
    """Advance the shaping filter one step; returns (x1d, x1d_dot, x1d_ddot)."""
    return filter_state.step(raw_cmd, dt)
