"""Pitch-plane agile-missile simulator with an adaptive backstepping
angle-of-attack autopilot."""

from .simulator import ScenarioConfig, load_scenario, run_scenario

__version__ = "0.1.0"

__all__ = ["ScenarioConfig", "load_scenario", "run_scenario", "__version__"]
