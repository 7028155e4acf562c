"""Pitch trim: pitch rate and fin angle that hold alpha constant."""

from __future__ import annotations

import math

from scipy.optimize import fsolve

from ..errors import OutOfEnvelopeError
from .dynamics import DEFAULT_ALTITUDE, Airframe, LongitudinalState, alpha_rate, state_derivative


def trim(airframe: Airframe, speed: float, alpha: float, t: float = 0.0,
         altitude: float = DEFAULT_ALTITUDE, perturbation=None) -> tuple[float, float]:
    """Return ``(q, delta)`` giving zero alpha rate and zero pitch acceleration."""

    def residual(x):
        q, delta = x
        st = LongitudinalState.from_wind(speed, alpha, q=q)
        du, dw, dq = state_derivative(st, delta, t, airframe, altitude, perturbation)
        return [alpha_rate(st, du, dw), dq]

    sol, info, ier, msg = fsolve(residual, [0.0, 0.0], full_output=True, xtol=1e-13)
    if ier != 1 or max(abs(r) for r in residual(sol)) > 1e-8:
        raise OutOfEnvelopeError(f"no trim at alpha={math.degrees(alpha):.2f} deg: {msg}")
    return float(sol[0]), float(sol[1])
