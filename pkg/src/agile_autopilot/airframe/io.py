"""Airframe files: JSON with a reference block, boost schedule and aero model.

Layout::

    {
      "schema_version": 1,
      "name": "...",
      "reference": {"area_m2": 0.01267, "length_m": 0.127},
      "mass": {"mass_launch": 90, "mass_burnout": 65, "iyy_launch": 20,
               "iyy_burnout": 15.5, "xcg_launch": 1.5, "xcg_burnout": 1.48,
               "thrust": 8000, "t_burnout": 2.5, "xcg_ref": null},
      "aero": {"type": "table",
               "alpha_deg": [...], "mach": [...],
               "tables": {"cn0": [[...per Mach...] per alpha], "cnd": ..., "cm0": ...,
                          "cmd": ..., "ca0": [...per Mach], "caa": ..., "cad": ...,
                          "cmq": ..., "dcat": ...}}
    }

``aero.type`` may also be ``"analytic"`` with an optional ``params`` object
overriding fields of the synthetic model.
"""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path

import numpy as np

from ..errors import ConfigError
from .aero import ALPHA_MACH_COMPONENTS, MACH_COMPONENTS, AnalyticAero, TableAero
from .dynamics import Airframe
from .mass import BoostSchedule

SCHEMA_VERSION = 1


def airframe_from_dict(data: dict) -> Airframe:
    try:
        version = data.get("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            raise ConfigError(f"unsupported airframe schema_version {version}")
        schedule = BoostSchedule(**data["mass"])
        ref = data.get("reference", {})
        aero_def = data.get("aero", {"type": "analytic"})
        kind = aero_def.get("type", "table")
        if kind == "analytic":
            params = dict(aero_def.get("params", {}))
            if "area_m2" in ref:
                params["S"] = ref["area_m2"]
            if "length_m" in ref:
                params["l"] = ref["length_m"]
            aero = AnalyticAero(**params)
        elif kind == "table":
            aero = TableAero(
                S=ref["area_m2"],
                l=ref["length_m"],
                alpha=np.radians(aero_def["alpha_deg"]),
                mach=aero_def["mach"],
                tables={k: np.asarray(v, float) for k, v in aero_def["tables"].items()},
            )
        else:
            raise ConfigError(f"unknown aero type {kind!r}")
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid airframe definition: {exc}") from exc
    return Airframe(aero=aero, schedule=schedule, name=data.get("name", "airframe"))


def airframe_to_dict(airframe: Airframe) -> dict:
    aero = airframe.aero
    out = {
        "schema_version": SCHEMA_VERSION,
        "name": airframe.name,
        "reference": {"area_m2": aero.S, "length_m": aero.l},
        "mass": airframe.schedule.to_dict(),
    }
    if isinstance(aero, TableAero):
        out["aero"] = {
            "type": "table",
            "alpha_deg": np.degrees(aero.alpha).tolist(),
            "mach": aero.mach.tolist(),
            "tables": {k: aero.tables[k].tolist() for k in ALPHA_MACH_COMPONENTS + MACH_COMPONENTS},
        }
    else:
        params = {f.name: getattr(aero, f.name) for f in dataclasses.fields(aero)}
        params.pop("S"), params.pop("l")
        out["aero"] = {"type": "analytic", "params": params}
    return out


def load_airframe(path) -> Airframe:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read airframe file {path}: {exc}") from exc
    return airframe_from_dict(data)


def save_airframe(airframe: Airframe, path) -> None:
    Path(path).write_text(json.dumps(airframe_to_dict(airframe), indent=2) + "\n")
