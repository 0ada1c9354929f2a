"""Exception types shared across the package."""


class TlsPulseError(Exception):
    """Base class for all package-specific errors."""


class StepUnderflow(TlsPulseError):
    """Adaptive integrator step collapsed below the resolvable scale."""


class NonFiniteState(TlsPulseError):
    """The integrated state became NaN or infinite."""


class OutOfRange(TlsPulseError):
    """Requested sample time lies outside the trajectory span."""


class ChirpNotSupported(TlsPulseError):
    """Operation requires a fixed carrier but the drive is chirped."""


class ResonantDenominator(TlsPulseError):
    """A closed-form denominator is too close to zero to evaluate."""


class ZeroDissipation(TlsPulseError):
    """Fixed point undefined because a relaxation rate vanishes."""


class NonPositiveAmplitude(TlsPulseError):
    """Pulse design needs a strictly positive peak amplitude."""


class RedShiftedDetuning(TlsPulseError):
    """Amplitude shaping requires a blue-shifted carrier (delta > 0)."""


class OverlappingPulses(TlsPulseError):
    """Pulse-train spacing too small for the member widths."""


class ConfigError(TlsPulseError):
    """Scenario configuration is invalid; message carries the field path."""


class IoError(TlsPulseError):
    """Dataset file could not be written or read."""


class UnknownFigure(TlsPulseError):
    """Figure id is not one of fig1..fig8."""
