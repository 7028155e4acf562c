"""Longitudinal rigid-body plant: coefficient buildup, forces and the body-axis EOM."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from ..errors import SingularFlightConditionError
from .aero import AnalyticAero
from .atmosphere import atmosphere
from .mass import BoostSchedule, MassProperties, mass_properties

DEFAULT_ALTITUDE = 2000.0


@dataclass(frozen=True)
class LongitudinalState:
    """Body-axis velocities and pitch rate, plus attitude and planar position.

    ``theta`` is the body attitude in the maneuver plane; ``x``/``z`` are
    positions in that plane (body-axis convention, z positive toward the
    body +z side at zero attitude), kept for bookkeeping only.
    """

    u: float
    w: float
    q: float
    theta: float = 0.0
    x: float = 0.0
    z: float = 0.0
    t: float = 0.0

    @property
    def speed(self) -> float:
        return math.hypot(self.u, self.w)

    @property
    def alpha(self) -> float:
        return math.atan2(self.w, self.u)

    @classmethod
    def from_wind(cls, speed, alpha, q=0.0, theta=None, t=0.0):
        theta = alpha if theta is None else theta
        return cls(u=speed * math.cos(alpha), w=speed * math.sin(alpha), q=q, theta=theta, t=t)


@dataclass(frozen=True)
class Airframe:
    aero: object = field(default_factory=AnalyticAero)
    schedule: BoostSchedule = field(
        default_factory=lambda: BoostSchedule(
            mass_launch=90.0,
            mass_burnout=65.0,
            iyy_launch=20.0,
            iyy_burnout=15.5,
            xcg_launch=1.50,
            xcg_burnout=1.48,
            thrust=8000.0,
            t_burnout=2.5,
        )
    )
    name: str = "synthetic-srAAM"

    def mass(self, t: float) -> MassProperties:
        return mass_properties(t, self.schedule)

    def without_thrust(self) -> "Airframe":
        return replace(self, schedule=replace(self.schedule, thrust=0.0))


def default_airframe() -> Airframe:
    """Synthetic representative short-range air-to-air airframe."""
    return Airframe()


class AeroCoefficients(NamedTuple):
    ca: float
    cn: float
    cm: float


@dataclass(frozen=True)
class FlightCondition:
    alpha: float
    q: float
    speed: float
    mach: float
    qbar: float
    mass: MassProperties


def flight_condition(state: LongitudinalState, t: float, airframe: Airframe,
                     altitude: float = DEFAULT_ALTITUDE) -> FlightCondition:
    speed = state.speed
    if speed <= 0.0:
        raise SingularFlightConditionError("airspeed is zero")
    atm = atmosphere(altitude, speed)
    alpha = state.alpha
    airframe.aero.check_envelope(alpha, atm.mach)
    return FlightCondition(alpha=alpha, q=state.q, speed=speed, mach=atm.mach,
                           qbar=atm.qbar, mass=airframe.mass(t))


def aero_coefficients(alpha, mach, delta, q, speed, mass: MassProperties, aero,
                      fin_forces: bool = True) -> AeroCoefficients:
    """Nominal coefficient buildup. Roll-coupling increments are added downstream.

    ``fin_forces=False`` drops the fin terms from C_A and C_N (the moment
    keeps them); used to build a plant with no fin-lift disturbance.
    """
    aero.check_envelope(alpha, mach)
    ca_fin = aero.cad(mach) * (abs(delta) / 2) ** 2
    cn_fin = aero.cnd(alpha, mach) * delta
    ca = aero.ca0(mach) + aero.caa(mach) * alpha + aero.dcat(mach)
    cn = aero.cn0(alpha, mach)
    damping = aero.cmq(mach) * q * aero.l / (2 * speed) if speed > 0 else 0.0
    cm = (aero.cm0(alpha, mach) + damping + aero.cmd(alpha, mach) * delta
          - (cn + cn_fin) * mass.xcg_shift / aero.l)
    if fin_forces:
        ca += ca_fin
        cn += cn_fin
    return AeroCoefficients(ca, cn, cm)


def forces_moments(coeffs: AeroCoefficients, qbar: float, aero) -> tuple[float, float, float]:
    ca, cn, cm = coeffs
    qs = qbar * aero.S
    return -qs * ca, -qs * cn, qs * aero.l * cm


def state_derivative(state: LongitudinalState, delta: float, t: float, airframe: Airframe,
                     altitude: float = DEFAULT_ALTITUDE, perturbation=None) -> tuple[float, float, float]:
    """(u_dot, w_dot, q_dot) of the body-axis longitudinal equations, gravity omitted.

    ``perturbation``, when given, maps nominal coefficients to the ones the
    truth plant feels (see ``feedback_form.UncertaintyConfig.apply``).
    """
    fc = flight_condition(state, t, airframe, altitude)
    fin_forces = getattr(perturbation, "inject_h1", True)
    coeffs = aero_coefficients(fc.alpha, fc.mach, delta, state.q, fc.speed, fc.mass,
                               airframe.aero, fin_forces=fin_forces)
    if perturbation is not None:
        coeffs = perturbation.apply(coeffs)
    fx, fz, my = forces_moments(coeffs, fc.qbar, airframe.aero)
    m = fc.mass
    du = -state.w * state.q + (fx + m.thrust) / m.m
    dw = state.u * state.q + fz / m.m
    dq = my / m.iyy
    return du, dw, dq


def alpha_rate(state: LongitudinalState, du: float, dw: float) -> float:
    """Angle-of-attack rate implied by body-axis accelerations."""
    return (state.u * dw - state.w * du) / (state.u**2 + state.w**2)
