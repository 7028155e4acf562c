from .aero import AnalyticAero, TableAero, peak_magnitudes, tabulate
from .atmosphere import AtmosphereSample, atmosphere
from .dynamics import (
    DEFAULT_ALTITUDE,
    AeroCoefficients,
    Airframe,
    FlightCondition,
    LongitudinalState,
    aero_coefficients,
    alpha_rate,
    default_airframe,
    flight_condition,
    forces_moments,
    state_derivative,
)
from .io import airframe_from_dict, airframe_to_dict, load_airframe, save_airframe
from .mass import BoostSchedule, MassProperties, mass_properties
from .trim import trim

__all__ = [
    "AeroCoefficients",
    "Airframe",
    "AnalyticAero",
    "AtmosphereSample",
    "BoostSchedule",
    "DEFAULT_ALTITUDE",
    "FlightCondition",
    "LongitudinalState",
    "MassProperties",
    "TableAero",
    "aero_coefficients",
    "airframe_from_dict",
    "airframe_to_dict",
    "alpha_rate",
    "atmosphere",
    "default_airframe",
    "flight_condition",
    "forces_moments",
    "load_airframe",
    "mass_properties",
    "peak_magnitudes",
    "save_airframe",
    "state_derivative",
    "tabulate",
    "trim",
]
