"""Stationary light pulses in standing-wave EIT media.

Closed-form polariton dynamics, grating Fourier-coefficient machinery,
numerical solvers for non-moving and thermal media, a first-principles
harmonic-ladder oracle, and a scenario CLI emitting deterministic datasets.
"""

__version__ = "0.1.0"

from .core import (
    CouplingSchedule,
    MediumParams,
    PolaritonField,
    ProbeField,
    SimulationGrid,
    cos2_theta,
    displacement_r,
    gaussian_profile,
    group_velocity,
)
from .fourier import (
    DispersionParams,
    FourierCoefficients,
    beta,
    coeff_a,
    coeff_d,
    dispersion_params,
    fourier_coefficients,
    quadrature_oracle,
)
from .analytic import (
    DegenerateModeError,
    RamanExpansion,
    SpectralField,
    cold_adiabatic_evolve,
    energy_density,
    initial_split,
    nonadiabatic_spectral_evolve,
    polariton_to_spectrum,
    probe_from_polariton,
    raman_harmonics,
    reconstruct_raman_coherence,
    spectrum_to_polariton,
)
from .solver import (
    MBState,
    SolverError,
    SolverReport,
    characteristic_speeds,
    evolve_cold_numeric,
    evolve_mb_harmonics,
    evolve_thermal_numeric,
)
from .observables import PulseMetrics, compute_metrics, variance_growth_rate

__all__ = [
    "__version__",
    "CouplingSchedule",
    "MediumParams",
    "PolaritonField",
    "ProbeField",
    "SimulationGrid",
    "cos2_theta",
    "displacement_r",
    "gaussian_profile",
    "group_velocity",
    "DispersionParams",
    "FourierCoefficients",
    "beta",
    "coeff_a",
    "coeff_d",
    "dispersion_params",
    "fourier_coefficients",
    "quadrature_oracle",
    "DegenerateModeError",
    "RamanExpansion",
    "SpectralField",
    "cold_adiabatic_evolve",
    "energy_density",
    "initial_split",
    "nonadiabatic_spectral_evolve",
    "polariton_to_spectrum",
    "probe_from_polariton",
    "raman_harmonics",
    "reconstruct_raman_coherence",
    "spectrum_to_polariton",
    "MBState",
    "SolverError",
    "SolverReport",
    "characteristic_speeds",
    "evolve_cold_numeric",
    "evolve_mb_harmonics",
    "evolve_thermal_numeric",
    "PulseMetrics",
    "compute_metrics",
    "variance_growth_rate",
]
