"""Backstepping angle-of-attack law with time-delay estimation of the
lumped uncertainties."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError, ControlEffectivenessLossError
from ..feedback_form import EFFECTIVENESS_FLOOR
from .filters import LagChannel


@dataclass(frozen=True)
class BacksteppingGains:
    k1: float = 25.0
    k2: float = 25.0
    tau_d: float = 0.02

    def __post_init__(self):
        if self.k1 <= 0 or self.k2 <= 0 or self.tau_d <= 0:
            raise ConfigError("k1, k2 and tau_d must be positive")


def residuals(x1, x2, x1d, x2d):
    return x1 - x1d, x2 - x2d


def virtual_command(f1, z1, x1d_dot, d1_hat, gains: BacksteppingGains):
    """Desired pitch rate."""
    return -f1 - gains.k1 * z1 + x1d_dot - d1_hat


def control_law(f2, h2, z1, z2, x2d_dot, d2_hat, gains: BacksteppingGains,
                h2_floor: float = 0.0):
    """Fin command. The ``-z1`` term removes the z1*z2 cross term from the
    two-state Lyapunov derivative."""
    if h2 == 0.0 or abs(h2) < h2_floor:
        raise ControlEffectivenessLossError(f"|h2| = {abs(h2):.3g} below floor")
    return (-f2 - gains.k2 * z2 + x2d_dot - z1 - d2_hat) / h2


class TimeDelayEstimator:
    """Delayed-replay estimate of the lumped unknowns.

    Each channel is passed through the same single lag; the unknown term one
    delay ago is what the delayed state rates say the plant did minus what
    the nominal model predicted. The state rates come from backward
    differences, which are interval averages, so the model-side inputs
    (``q``, ``f1``, ``f2``, ``h2*u``) are fed as trapezoid averages of
    consecutive samples to describe the same interval.
    """

    def __init__(self, tau_d: float):
        self.tau_d = tau_d
        self.x1 = LagChannel(tau_d)
        self.x2 = LagChannel(tau_d)
        self.q_model = LagChannel(tau_d)
        self.f1 = LagChannel(tau_d)
        self.f2 = LagChannel(tau_d)
        self.h2u = LagChannel(tau_d)
        self._prev = None

    @property
    def channels(self):
        return self.x1, self.x2, self.f1, self.f2, self.h2u, self.q_model

    def update(self, x1, x2, f1, f2, h2u, dt) -> tuple[float, float]:
        model = (x2, f1, f2, h2u)
        if self._prev is None:
            # seed so the first estimate is zero rather than a startup spike
            self.x1.reset(x1, rate=f1 + x2)
            self.x2.reset(x2, rate=f2 + h2u)
            for ch, x in zip((self.q_model, self.f1, self.f2, self.h2u), model):
                ch.reset(x)
        else:
            self.x1.update(x1, dt)
            self.x2.update(x2, dt)
            for ch, x, prev in zip((self.q_model, self.f1, self.f2, self.h2u), model, self._prev):
                ch.update(0.5 * (x + prev), dt)
        self._prev = model
        return estimate_uncertainties(*self.channels)


def estimate_uncertainties(x1: LagChannel, x2: LagChannel, f1: LagChannel,
                           f2: LagChannel, h2u: LagChannel,
                           q_model: LagChannel | None = None) -> tuple[float, float]:
    """Delta_hat from lagged channels; ``q_model`` defaults to the ``x2`` lag."""
    q = x2.value if q_model is None else q_model.value
    d1 = x1.rate - f1.value - q
    d2 = x2.rate - f2.value - h2u.value
    return d1, d2


__all__ = [
    "EFFECTIVENESS_FLOOR",
    "BacksteppingGains",
    "TimeDelayEstimator",
    "control_law",
    "estimate_uncertainties",
    "residuals",
    "virtual_command",
]
