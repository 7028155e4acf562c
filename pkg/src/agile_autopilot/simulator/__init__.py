from ..integrate import rk4_step
from .config import (
    ScenarioConfig,
    apply_overrides,
    dump_scenario,
    load_scenario,
    read_json,
)
from .engine import ScenarioResult, run_scenario
from .metrics import compute_metrics, step_response_metrics, steady_state_error
from .profile import AlphaProfile, load_alpha_profile, write_alpha_profile
from .telemetry import CHANNELS, Telemetry, read_telemetry_csv, write_metrics

__all__ = [
    "AlphaProfile",
    "CHANNELS",
    "ScenarioConfig",
    "ScenarioResult",
    "Telemetry",
    "apply_overrides",
    "compute_metrics",
    "dump_scenario",
    "load_alpha_profile",
    "load_scenario",
    "read_json",
    "read_telemetry_csv",
    "rk4_step",
    "run_scenario",
    "step_response_metrics",
    "steady_state_error",
    "write_alpha_profile",
    "write_metrics",
]
