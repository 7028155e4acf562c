"""Fixed-step classical Runge-Kutta integration."""

from __future__ import annotations

import numpy as np

from .errors import SimulationDivergedError


def rk4_step(y: np.ndarray, fn, t: float, dt: float) -> np.ndarray:
    """Advance ``y' = fn(t, y)`` by one classical RK4 step of size ``dt``."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    h2 = 0.5 * dt
    k1 = np.asarray(fn(t, y), dtype=float)
    k2 = np.asarray(fn(t + h2, y + h2 * k1), dtype=float)
    k3 = np.asarray(fn(t + h2, y + h2 * k2), dtype=float)
    k4 = np.asarray(fn(t + dt, y + dt * k3), dtype=float)
    out = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not (np.all(np.isfinite(k4)) and np.all(np.isfinite(out))):
        raise SimulationDivergedError(f"non-finite state after step at t={t:.6f}")
    return out
