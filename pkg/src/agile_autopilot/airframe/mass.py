"""Boost-phase mass properties.

Mass, pitch inertia and CG location vary linearly between their launch
and burnout values; thrust is on over the closed interval [0, t_burnout].
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError


@dataclass(frozen=True)
class MassProperties:
    m: float
    iyy: float
    xcg: float
    xcg_ref: float
    thrust: float

    @property
    def xcg_shift(self) -> float:
        """CG offset from the reference location, ``xcg_ref - xcg``."""
        return self.xcg_ref - self.xcg


@dataclass(frozen=True)
class BoostSchedule:
    mass_launch: float
    mass_burnout: float
    iyy_launch: float
    iyy_burnout: float
    xcg_launch: float
    xcg_burnout: float
    thrust: float
    t_burnout: float
    xcg_ref: float | None = None

    def __post_init__(self):
        if min(self.mass_launch, self.mass_burnout, self.iyy_launch, self.iyy_burnout) <= 0:
            raise ConfigError("mass and inertia must be positive")
        if self.t_burnout < 0 or self.thrust < 0:
            raise ConfigError("t_burnout and thrust must be non-negative")

    @property
    def reference_cg(self) -> float:
        return self.xcg_launch if self.xcg_ref is None else self.xcg_ref

    def to_dict(self) -> dict:
        return {
            "mass_launch": self.mass_launch,
            "mass_burnout": self.mass_burnout,
            "iyy_launch": self.iyy_launch,
            "iyy_burnout": self.iyy_burnout,
            "xcg_launch": self.xcg_launch,
            "xcg_burnout": self.xcg_burnout,
            "thrust": self.thrust,
            "t_burnout": self.t_burnout,
            "xcg_ref": self.xcg_ref,
        }


def mass_properties(t: float, schedule: BoostSchedule) -> MassProperties:
    if t < 0:
        raise ValueError("t must be non-negative")
    s = schedule
    if t <= s.t_burnout:
        frac = t / s.t_burnout if s.t_burnout > 0 else 1.0
        thrust = s.thrust
    else:
        frac = 1.0
        thrust = 0.0
    if frac == 1.0:
        m, iyy, xcg = s.mass_burnout, s.iyy_burnout, s.xcg_burnout
    else:
        m = s.mass_launch + frac * (s.mass_burnout - s.mass_launch)
        iyy = s.iyy_launch + frac * (s.iyy_burnout - s.iyy_launch)
        xcg = s.xcg_launch + frac * (s.xcg_burnout - s.xcg_launch)
    return MassProperties(m=m, iyy=iyy, xcg=xcg, xcg_ref=s.reference_cg, thrust=thrust)
