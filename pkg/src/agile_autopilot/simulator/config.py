"""Scenario files: JSON, versioned, every section optional.

Unknown keys are rejected so typos fail loudly. Angles are degrees in the
file and radians everywhere else.
"""

from __future__ import annotations

import copy
import dataclasses
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigError

SCHEMA_VERSION = 1
COMMAND_TYPES = ("step", "profile", "acceleration", "agile_turn")


@dataclass
class InitialConditions:
    speed: float = 250.0
    altitude: float = 2000.0
    alpha_deg: float = 0.0
    q_deg_s: float = 0.0
    trim: bool = False


@dataclass
class CommandConfig:
    """``step``: hold ``alpha_deg`` from ``t_step``. ``profile``: alpha(t) from
    the CSV at ``path``. ``acceleration``: PI outer loop following the
    ``schedule`` of [t, a_cmd] pairs. ``agile_turn``: profile first, then
    blend into the acceleration loop once the turn-exit condition fires.

    ``preview``: a file profile is known ahead of time, so it is sampled
    ``2*zeta_f/omega_f`` seconds early, which cancels the shaping filter's
    ramp lag."""

    type: str = "step"
    alpha_deg: float = 20.0
    t_step: float = 0.0
    path: str | None = None
    schedule: list | None = None
    preview: bool = True


@dataclass
class ControllerConfig:
    k1: float = 25.0
    k2: float = 25.0
    tau_d: float = 0.02
    omega_f: float = 20.0
    zeta_f: float = 1.0
    omega_rate: float = 150.0
    zeta_rate: float = 1.0
    kp: float = 0.0098
    ki: float = 0.34
    alpha_cmd_limit_deg: float = 50.0
    blend_duration_s: float = 0.2
    turn_exit_alpha_deg: float = 10.0
    turn_exit_heading_deg: float = 150.0
    adaptation: bool = True
    warmup_delays: float = 5.0


@dataclass
class ActuatorConfig:
    omega: float = 180.0
    zeta: float = 0.7
    delta_limit_deg: float = 30.0
    rate_limit_deg_s: float = 450.0


@dataclass
class UncertaintySection:
    delta_pert: float = 0.0
    coupling: bool = False
    coupling_cn: float | None = None
    coupling_cm: float | None = None
    inject_h1: bool = True


@dataclass
class SimConfig:
    dt: float = 0.001
    t_final: float = 2.0
    seed: int = 0
    noise_alpha_deg: float = 0.0
    noise_q_deg_s: float = 0.0
    noise_accel: float = 0.0


@dataclass
class OutputConfig:
    dir: str = "out"


_SECTIONS = {
    "initial": InitialConditions,
    "command": CommandConfig,
    "controller": ControllerConfig,
    "actuator": ActuatorConfig,
    "uncertainty": UncertaintySection,
    "sim": SimConfig,
    "output": OutputConfig,
}


@dataclass
class ScenarioConfig:
    name: str = "scenario"
    airframe: str | None = None
    initial: InitialConditions = field(default_factory=InitialConditions)
    command: CommandConfig = field(default_factory=CommandConfig)
    controller: ControllerConfig = field(default_factory=ControllerConfig)
    actuator: ActuatorConfig = field(default_factory=ActuatorConfig)
    uncertainty: UncertaintySection = field(default_factory=UncertaintySection)
    sim: SimConfig = field(default_factory=SimConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    base_dir: str = field(default=".", compare=False)

    def validate(self) -> "ScenarioConfig":
        s = self.sim
        if not (isinstance(s.dt, (int, float)) and math.isfinite(s.dt) and s.dt > 0):
            raise ConfigError(f"sim.dt must be positive, got {s.dt!r}")
        if not s.t_final > s.dt:
            raise ConfigError("sim.t_final must exceed sim.dt")
        if self.initial.speed <= 0:
            raise ConfigError("initial.speed must be positive")
        if not 0 <= self.initial.altitude <= 11000:
            raise ConfigError("initial.altitude must lie in [0, 11000] m")
        if abs(self.initial.alpha_deg) >= 90:
            raise ConfigError("initial.alpha_deg must lie within +/-90 deg")
        c = self.command
        if c.type not in COMMAND_TYPES:
            raise ConfigError(f"command.type must be one of {COMMAND_TYPES}, got {c.type!r}")
        if c.type in ("profile", "agile_turn") and not c.path:
            raise ConfigError(f"command.path is required for {c.type!r} commands")
        if c.type in ("acceleration", "agile_turn"):
            sched = c.schedule
            if not sched or any(not isinstance(p, (list, tuple)) or len(p) != 2 for p in sched):
                raise ConfigError("command.schedule must be a non-empty list of [t, a_cmd] pairs")
            times = [float(p[0]) for p in sched]
            if any(b <= a for a, b in zip(times, times[1:])):
                raise ConfigError("command.schedule times must be strictly increasing")
        k = self.controller
        if min(k.k1, k.k2, k.tau_d, k.omega_f, k.zeta_f, k.omega_rate, k.zeta_rate) <= 0:
            raise ConfigError("controller gains and filter parameters must be positive")
        if k.alpha_cmd_limit_deg <= 0 or k.blend_duration_s < 0:
            raise ConfigError("alpha_cmd_limit_deg must be positive, blend_duration_s non-negative")
        a = self.actuator
        if min(a.omega, a.zeta, a.delta_limit_deg, a.rate_limit_deg_s) <= 0:
            raise ConfigError("actuator parameters must be positive")
        if self.uncertainty.delta_pert < 0:
            raise ConfigError("uncertainty.delta_pert must be non-negative")
        if min(s.noise_alpha_deg, s.noise_q_deg_s, s.noise_accel) < 0:
            raise ConfigError("noise levels must be non-negative")
        return self

    def resolve_path(self, p: str) -> Path:
        path = Path(p)
        return path if path.is_absolute() else Path(self.base_dir) / path

    def to_dict(self) -> dict:
        out = {"schema_version": SCHEMA_VERSION, "name": self.name, "airframe": self.airframe}
        for key in _SECTIONS:
            out[key] = dataclasses.asdict(getattr(self, key))
        return out

    @classmethod
    def from_dict(cls, data: dict, base_dir=".") -> "ScenarioConfig":
        if not isinstance(data, dict):
            raise ConfigError("scenario must be a JSON object")
        data = dict(data)
        version = data.pop("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ConfigError(f"unsupported schema_version {version!r}")
        kwargs = {"base_dir": str(base_dir)}
        for key in ("name", "airframe"):
            if key in data:
                kwargs[key] = data.pop(key)
        for key, section_cls in _SECTIONS.items():
            section = data.pop(key, None) or {}
            if not isinstance(section, dict):
                raise ConfigError(f"section {key!r} must be an object")
            names = {f.name for f in dataclasses.fields(section_cls)}
            unknown = set(section) - names
            if unknown:
                raise ConfigError(f"unknown keys in {key!r}: {sorted(unknown)}")
            try:
                kwargs[key] = section_cls(**section)
            except TypeError as exc:
                raise ConfigError(f"invalid {key!r} section: {exc}") from exc
        if data:
            raise ConfigError(f"unknown top-level keys: {sorted(data)}")
        return cls(**kwargs).validate()


def _parse_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def apply_overrides(data: dict, overrides) -> dict:
    """Apply ``section.key=value`` strings to a raw scenario dict (copied)."""
    data = copy.deepcopy(data)
    for item in overrides or ():
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not key=value")
        key, value = item.split("=", 1)
        parts = key.strip().split(".")
        node = data
        for part in parts[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise ConfigError(f"override path {key!r} crosses a non-object")
        node[parts[-1]] = _parse_value(value.strip())
    return data


def read_json(path) -> dict:
    path = Path(path)
    try:
        return json.loads(path.read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def load_scenario(path, overrides=None) -> ScenarioConfig:
    path = Path(path)
    data = apply_overrides(read_json(path), overrides)
    return ScenarioConfig.from_dict(data, base_dir=path.parent)


def dump_scenario(config: ScenarioConfig) -> str:
    return json.dumps(config.to_dict(), indent=2) + "\n"
