"""Driven two-level-system dynamics beyond the rotating-wave approximation.

Exact Schrodinger and optical-Bloch propagation of a coherently driven
two-level system, closed-form RWA and second-order-averaging solutions
with the Bloch-Siegert shift, and pi-pulse design by carrier chirping
or amplitude shaping.
"""

from .params import TlsParams
from .errors import (
    TlsPulseError,
    StepUnderflow,
    NonFiniteState,
    OutOfRange,
    ChirpNotSupported,
    ResonantDenominator,
    ZeroDissipation,
    NonPositiveAmplitude,
    RedShiftedDetuning,
    OverlappingPulses,
    ConfigError,
    IoError,
    UnknownFigure,
)
from .drives import (
    CwTone,
    GaussianPulse,
    ChirpedGaussianPulse,
    PulseTrain,
    evaluate_drive,
    envelope_amplitude,
    instantaneous_frequency,
    accumulated_phase,
    envelope_area,
    carrier_frequency,
    save_drive,
    load_drive,
)
from .integrate import IntegratorConfig, Trajectory, integrate, sample
from .schrodinger import (
    AmplitudePair,
    Frame,
    populations,
    propagate_lab,
    propagate_interaction,
    propagate_rotating,
    transform,
)
from .averaging import (
    rwa_solution,
    rwa_populations,
    naive_perturbation_c1,
    bloch_siegert_detuning,
    resonance_frequency,
    avg2_solution,
    avg2_populations,
    reconstruct_b,
)
from .bloch import (
    BlochState,
    bloch_populations,
    simulate_bloch_full,
    simulate_bloch_rwa,
    simulate_bloch_avg2,
    bloch_rwa_fixed_point,
    reconstruct_sigma,
)
from .pulsecraft import (
    pi_pulse_width,
    make_pi_pulse,
    make_chirped_pi_pulse,
    shaped_amplitude,
    make_shaped_pi_pulse,
    make_pulse_train,
    verify_pulse_area,
)
from .scenario import (
    ScenarioConfig,
    run_scenario,
    sweep_phase,
    sweep_frequency,
)
from .figures import reproduce_figure, FIGURES

__version__ = "0.1.0"

__all__ = [
    "TlsParams",
    "TlsPulseError",
    "StepUnderflow",
    "NonFiniteState",
    "OutOfRange",
    "ChirpNotSupported",
    "ResonantDenominator",
    "ZeroDissipation",
    "NonPositiveAmplitude",
    "RedShiftedDetuning",
    "OverlappingPulses",
    "ConfigError",
    "IoError",
    "UnknownFigure",
    "CwTone",
    "GaussianPulse",
    "ChirpedGaussianPulse",
    "PulseTrain",
    "evaluate_drive",
    "envelope_amplitude",
    "instantaneous_frequency",
    "accumulated_phase",
    "envelope_area",
    "carrier_frequency",
    "save_drive",
    "load_drive",
    "IntegratorConfig",
    "Trajectory",
    "integrate",
    "sample",
    "AmplitudePair",
    "Frame",
    "populations",
    "propagate_lab",
    "propagate_interaction",
    "propagate_rotating",
    "transform",
    "rwa_solution",
    "rwa_populations",
    "naive_perturbation_c1",
    "bloch_siegert_detuning",
    "resonance_frequency",
    "avg2_solution",
    "avg2_populations",
    "reconstruct_b",
    "BlochState",
    "bloch_populations",
    "simulate_bloch_full",
    "simulate_bloch_rwa",
    "simulate_bloch_avg2",
    "bloch_rwa_fixed_point",
    "reconstruct_sigma",
    "pi_pulse_width",
    "make_pi_pulse",
    "make_chirped_pi_pulse",
    "shaped_amplitude",
    "make_shaped_pi_pulse",
    "make_pulse_train",
    "verify_pulse_area",
    "ScenarioConfig",
    "run_scenario",
    "sweep_phase",
    "sweep_frequency",
    "reproduce_figure",
    "FIGURES",
    "__version__",
]
