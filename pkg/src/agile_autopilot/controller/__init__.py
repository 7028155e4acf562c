from .autopilot import AlphaAutopilot, ControllerOutput, Measurement, ShapingParams
from .backstepping import (
    BacksteppingGains,
    TimeDelayEstimator,
    control_law,
    estimate_uncertainties,
    residuals,
    virtual_command,
)
from .filters import LagChannel, SecondOrderFilter, delay_filter, lag_gain, shape_command
from .outer_loop import (
    CommandBlender,
    PIOuterGains,
    PIState,
    blend_commands,
    pi_acceleration_loop,
)

__all__ = [
    "AlphaAutopilot",
    "BacksteppingGains",
    "CommandBlender",
    "ControllerOutput",
    "LagChannel",
    "Measurement",
    "PIOuterGains",
    "PIState",
    "SecondOrderFilter",
    "ShapingParams",
    "TimeDelayEstimator",
    "blend_commands",
    "control_law",
    "delay_filter",
    "estimate_uncertainties",
    "lag_gain",
    "pi_acceleration_loop",
    "residuals",
    "shape_command",
    "virtual_command",
]
