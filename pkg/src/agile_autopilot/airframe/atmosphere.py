"""1976 standard atmosphere, troposphere layer only."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import OutOfEnvelopeError

T0 = 288.15  # K
P0 = 101325.0  # Pa
LAPSE_RATE = 0.0065  # K/m
R_AIR = 287.05287  # J/(kg K)
G0 = 9.80665  # m/s^2
GAMMA = 1.4
TROPOPAUSE = 11000.0  # m

_EXPONENT = G0 / (R_AIR * LAPSE_RATE)


@dataclass(frozen=True)
class AtmosphereSample:
    rho: float
    a: float
    qbar: float
    mach: float


def density_and_sound_speed(altitude: float) -> tuple[float, float]:
    if not 0.0 <= altitude <= TROPOPAUSE:
        raise OutOfEnvelopeError(
            f"altitude {altitude:g} m outside troposphere model [0, {TROPOPAUSE:g}] m"
        )
    temp = T0 - LAPSE_RATE * altitude
    pressure = P0 * (temp / T0) ** _EXPONENT
    return pressure / (R_AIR * temp), math.sqrt(GAMMA * R_AIR * temp)


def atmosphere(altitude: float, speed: float) -> AtmosphereSample:
    """Density, sound speed, dynamic pressure and Mach number at ``altitude``."""
    if speed < 0.0:
        raise ValueError("speed must be non-negative")
    rho, a = density_and_sound_speed(altitude)
    return AtmosphereSample(rho=rho, a=a, qbar=0.5 * rho * speed * speed, mach=speed / a)
