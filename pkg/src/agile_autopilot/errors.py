"""Exception hierarchy shared by the plant, controller and simulator."""


class AutopilotError(Exception):
    """Base class for all package errors."""


class ConfigError(AutopilotError, ValueError):
    """A scenario, sweep or airframe file failed to parse or validate."""


class OutOfEnvelopeError(AutopilotError):
    """A flight condition left the range the models are defined over."""


class SingularFlightConditionError(AutopilotError):
    """Airspeed vanished, so alpha and the f-form terms are undefined."""


class ControlEffectivenessLossError(AutopilotError):
    """Fin effectiveness fell below the floor that guards the h2 inverse."""


class SimulationDivergedError(AutopilotError):
    """The integrator produced a non-finite derivative or state."""
