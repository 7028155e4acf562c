"""Strict-feedback decomposition of the pitch-plane plant.

The angle-of-attack and pitch-rate equations are split as::

    alpha_dot = f1 + q + Delta1
    q_dot     = f2 + h2 * delta + Delta2

where f1, f2, h2 come from the nominal model the controller knows and
Delta1, Delta2 lump everything else the truth plant feels: the fin lift
term h1(delta), multiplicative coefficient errors and the roll-coupling
increments g1, g2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict

from .airframe.aero import peak_magnitudes
from .airframe.dynamics import AeroCoefficients, FlightCondition
from .errors import ConfigError, ControlEffectivenessLossError, SingularFlightConditionError

EFFECTIVENESS_FLOOR = 1e-3


@dataclass(frozen=True)
class StrictFeedbackTerms:
    f1: float
    f2: float
    h1: float
    h2: float
    g1: float = 0.0
    g2: float = 0.0


@dataclass(frozen=True)
class UncertaintyConfig:
    """Truth-plant perturbations. The controller never sees these.

    ``coupling_cn``/``coupling_cm`` of ``None`` mean "10 % of the airframe's
    peak |C_N0| / |C_M0|", resolved by :meth:`resolved`. ``inject_h1=False``
    removes the fin terms from the truth plant's force coefficients so the
    plant matches the controller's model exactly (moment unaffected).
    """

    delta_pert: float = 0.0
    coupling_cn: float | None = None
    coupling_cm: float | None = None
    coupling: bool = False
    inject_h1: bool = True

    def __post_init__(self):
        if self.delta_pert < 0:
            raise ConfigError("delta_pert must be non-negative")

    @property
    def scale(self) -> float:
        return 1.0 + self.delta_pert

    @property
    def d_cn(self) -> float:
        return (self.coupling_cn or 0.0) if self.coupling else 0.0

    @property
    def d_cm(self) -> float:
        return (self.coupling_cm or 0.0) if self.coupling else 0.0

    def resolved(self, aero) -> "UncertaintyConfig":
        cn, cm = self.coupling_cn, self.coupling_cm
        if cn is None or cm is None:
            peak_cn, peak_cm = peak_magnitudes(aero)
            cn = 0.1 * peak_cn if cn is None else cn
            cm = 0.1 * peak_cm if cm is None else cm
        return UncertaintyConfig(self.delta_pert, cn, cm, self.coupling, self.inject_h1)

    def apply(self, coeffs: AeroCoefficients) -> AeroCoefficients:
        k = self.scale
        return AeroCoefficients(k * coeffs.ca, k * coeffs.cn + self.d_cn, k * coeffs.cm + self.d_cm)

    def to_dict(self) -> dict:
        return asdict(self)


def _check_speed(fc: FlightCondition) -> None:
    if fc.speed <= 0:
        raise SingularFlightConditionError("airspeed is zero")


def eval_f1(fc: FlightCondition, aero, scale: float = 1.0) -> float:
    _check_speed(fc)
    a, mach, m = fc.alpha, fc.mach, fc.mass
    axial = aero.ca0(mach) + aero.caa(mach) * a + aero.dcat(mach)
    k = fc.qbar * aero.S / (m.m * fc.speed)
    return (-k * scale * (aero.cn0(a, mach) * math.cos(a) - axial * math.sin(a))
            - m.thrust * math.sin(a) / (m.m * fc.speed))


def eval_f2(fc: FlightCondition, aero, scale: float = 1.0) -> float:
    _check_speed(fc)
    a, mach, m = fc.alpha, fc.mach, fc.mass
    k = fc.qbar * aero.S * aero.l / m.iyy
    damping = aero.cmq(mach) * fc.q * aero.l / (2 * fc.speed)
    return k * scale * (aero.cm0(a, mach) + damping - aero.cn0(a, mach) * m.xcg_shift / aero.l)


def eval_h1(fc: FlightCondition, delta: float, aero, scale: float = 1.0) -> float:
    """Fin-lift contribution to alpha_dot; the controller neglects it."""
    _check_speed(fc)
    a, mach = fc.alpha, fc.mach
    k = fc.qbar * aero.S / (fc.mass.m * fc.speed)
    return -k * scale * (aero.cnd(a, mach) * delta * math.cos(a)
                         - aero.cad(mach) * (abs(delta) / 2) ** 2 * math.sin(a))


def eval_h2(fc: FlightCondition, aero, scale: float = 1.0,
            floor: float = EFFECTIVENESS_FLOOR) -> float:
    _check_speed(fc)
    a, mach = fc.alpha, fc.mach
    effectiveness = aero.cmd(a, mach) - aero.cnd(a, mach) * fc.mass.xcg_shift / aero.l
    if abs(effectiveness) < floor:
        raise ControlEffectivenessLossError(
            f"pitch control effectiveness {effectiveness:.3g} below floor {floor:g}"
        )
    return fc.qbar * aero.S * aero.l / fc.mass.iyy * scale * effectiveness


def eval_coupling(fc: FlightCondition, aero, cfg: UncertaintyConfig) -> tuple[float, float]:
    """Worst-case (phi = 45 deg) roll-coupling terms (g1, g2)."""
    _check_speed(fc)
    g1 = -fc.qbar * aero.S / (fc.mass.m * fc.speed) * cfg.d_cn * math.cos(fc.alpha)
    g2 = fc.qbar * aero.S * aero.l / fc.mass.iyy * cfg.d_cm
    return g1, g2


def strict_feedback_terms(fc: FlightCondition, delta: float, aero,
                          cfg: UncertaintyConfig | None = None) -> StrictFeedbackTerms:
    """All decomposition terms at one flight condition.

    With ``cfg`` the terms describe the perturbed truth plant (coefficients
    scaled by ``1 + delta_pert``, coupling included); without it, the
    nominal model.
    """
    scale = 1.0 if cfg is None else cfg.scale
    g1, g2 = (0.0, 0.0) if cfg is None else eval_coupling(fc, aero, cfg)
    return StrictFeedbackTerms(
        f1=eval_f1(fc, aero, scale),
        f2=eval_f2(fc, aero, scale),
        h1=eval_h1(fc, delta, aero, scale),
        h2=eval_h2(fc, aero, scale, floor=0.0),
        g1=g1,
        g2=g2,
    )


def truth_uncertainties(nominal: StrictFeedbackTerms, perturbed: StrictFeedbackTerms,
                        delta: float, inject_h1: bool = True) -> tuple[float, float]:
    """Lumped unknown terms: what the truth plant feels minus the nominal model.

    ``inject_h1=False`` matches a truth plant built without fin force
    terms (see ``UncertaintyConfig.inject_h1``).
    """
    h1 = perturbed.h1 if inject_h1 else 0.0
    d1 = (perturbed.f1 - nominal.f1) + perturbed.g1 + h1
    d2 = (perturbed.f2 - nominal.f2) + (perturbed.h2 - nominal.h2) * delta + perturbed.g2
    return d1, d2
