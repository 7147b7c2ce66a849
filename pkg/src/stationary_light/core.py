"""Grids, coupling-field schedules, initial profiles, and shared value types.

Natural units used throughout the package: lengths are measured in the
stored-pulse length L_p, times in the coupling-field switching time T_s,
and the saturated group velocity v_g0 = L_p/T_s is exactly 1.  The vacuum
speed of light in these units is 1/cos^2(theta0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TANH_SWITCH = "tanh_switch"
CONSTANT = "constant"
_SCHEDULE_KINDS = (TANH_SWITCH, CONSTANT)

#: Mixing angle giving cos^2(theta0) = 0.01, the default deep-EIT working point.
DEFAULT_THETA0 = math.acos(0.1)


@dataclass(frozen=True)
class SimulationGrid:
    """Uniform periodic spatial grid plus the default time horizon.

    ``z_min``/``z_max`` are in units of L_p; the grid excludes ``z_max``
    (periodic convention), so ``dz = (z_max - z_min)/n_z``.
    """

    z_min: float = -10.0
    z_max: float = 10.0
    n_z: int = 2048
    t_max: float = 10.0

    def __post_init__(self) -> None:
        if not self.z_max > self.z_min:
            raise ValueError(f"z_max must exceed z_min, got [{self.z_min}, {self.z_max}]")
        if self.n_z < 16:
            raise ValueError(f"n_z must be at least 16, got {self.n_z}")
        if self.t_max <= 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")

    @property
    def dz(self) -> float:
        return (self.z_max - self.z_min) / self.n_z

    @property
    def z(self) -> np.ndarray:
        return self.z_min + self.dz * np.arange(self.n_z)

    @property
    def wavenumbers(self) -> np.ndarray:
        """Spatial angular frequencies in FFT ordering."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n_z, d=self.dz)

    @property
    def length(self) -> float:
        return self.z_max - self.z_min


@dataclass(frozen=True)
class CouplingSchedule:
    """Forward/backward coupling amplitudes and the switch-on time profile.

    The complex amplitudes are normalised at construction so that
    ``|kappa_plus|^2 + |kappa_minus|^2 = 1``.  ``theta0`` is the mixing
    angle at saturation; ``schedule_kind`` selects between a tanh switch-on
    starting from zero coupling at t=0 and a constant (always-on) field.
    """

    kappa_plus: complex
    kappa_minus: complex
    theta0: float = DEFAULT_THETA0
    T_s: float = 1.0
    schedule_kind: str = TANH_SWITCH

    def __post_init__(self) -> None:
        kp = complex(self.kappa_plus)
        km = complex(self.kappa_minus)
        total = math.sqrt(abs(kp) ** 2 + abs(km) ** 2)
        if total == 0.0:
            raise ValueError("at least one coupling amplitude must be non-zero")
        object.__setattr__(self, "kappa_plus", kp / total)
        object.__setattr__(self, "kappa_minus", km / total)
        if not 0.0 < self.theta0 < math.pi / 2:
            raise ValueError(f"theta0 must lie in (0, pi/2), got {self.theta0}")
        if self.T_s <= 0:
            raise ValueError(f"T_s must be positive, got {self.T_s}")
        if self.schedule_kind not in _SCHEDULE_KINDS:
            raise ValueError(
                f"unknown schedule_kind {self.schedule_kind!r}; expected one of {_SCHEDULE_KINDS}"
            )

    @classmethod
    def from_intensities(
        cls,
        kappa_plus_sq: float,
        kappa_minus_sq: float | None = None,
        **kwargs,
    ) -> "CouplingSchedule":
        """Build a schedule from the intensity fractions of the two components."""
        if not 0.0 <= kappa_plus_sq <= 1.0:
            raise ValueError(f"kappa_plus_sq must lie in [0, 1], got {kappa_plus_sq}")
        if kappa_minus_sq is None:
            kappa_minus_sq = 1.0 - kappa_plus_sq
        if not 0.0 <= kappa_minus_sq <= 1.0:
            raise ValueError(f"kappa_minus_sq must lie in [0, 1], got {kappa_minus_sq}")
        if kappa_plus_sq + kappa_minus_sq == 0.0:
            raise ValueError("coupling intensities must not both vanish")
        return cls(math.sqrt(kappa_plus_sq), math.sqrt(kappa_minus_sq), **kwargs)

    @property
    def kappa_plus_sq(self) -> float:
        return abs(self.kappa_plus) ** 2

    @property
    def kappa_minus_sq(self) -> float:
        return abs(self.kappa_minus) ** 2

    @property
    def y(self) -> float:
        """Modulation depth 2|kappa+||kappa-| of the intensity grating, in [0, 1]."""
        return min(2.0 * abs(self.kappa_plus) * abs(self.kappa_minus), 1.0)

    @property
    def phi(self) -> float:
        """Phase angle of kappa+ kappa-*; zero for a pure traveling wave."""
        prod = self.kappa_plus * np.conj(self.kappa_minus)
        return float(np.angle(prod)) if prod != 0 else 0.0

    @property
    def cos2_theta0(self) -> float:
        return math.cos(self.theta0) ** 2


def _log_cosh(x: np.ndarray | float) -> np.ndarray | float:
    # log(cosh(x)) without overflow for large |x|
    ax = np.abs(x)
    return ax + np.log1p(np.exp(-2.0 * ax)) - math.log(2.0)


def cos2_theta(schedule: CouplingSchedule, t: np.ndarray | float) -> np.ndarray | float:
    """cos^2 of the mixing angle at time t (>= 0)."""
    t = np.asarray(t, dtype=float) if np.ndim(t) else float(t)
    if np.any(np.asarray(t) < 0.0):
        raise ValueError("t must be non-negative")
    if schedule.schedule_kind == CONSTANT:
        return schedule.cos2_theta0 * np.ones_like(t) if np.ndim(t) else schedule.cos2_theta0
    return schedule.cos2_theta0 * np.tanh(t / schedule.T_s)


def group_velocity(schedule: CouplingSchedule, t: np.ndarray | float) -> np.ndarray | float:
    """Group velocity in units of L_p/T_s; saturates at 1 for the tanh switch."""
    return cos2_theta(schedule, t) / schedule.cos2_theta0


def displacement_r(schedule: CouplingSchedule, t: np.ndarray | float) -> np.ndarray | float:
    """Accumulated group-velocity displacement: integral of v_g from 0 to t.

    Closed form of the integral for the tanh switch; monotone non-decreasing.
    """
    t = np.asarray(t, dtype=float) if np.ndim(t) else float(t)
    if np.any(np.asarray(t) < 0.0):
        raise ValueError("t must be non-negative")
    if schedule.schedule_kind == CONSTANT:
        return t
    return schedule.T_s * _log_cosh(t / schedule.T_s)


def gaussian_profile(
    grid: SimulationGrid,
    amplitude: complex = 1.0,
    pulse_length: float = 1.0,
    center: float = 0.0,
) -> np.ndarray:
    """Gaussian envelope amplitude*exp(-((z-center)/pulse_length)^2) on the grid."""
    if pulse_length <= 0:
        raise ValueError(f"pulse_length must be positive, got {pulse_length}")
    z = grid.z
    return (amplitude * np.exp(-(((z - center) / pulse_length) ** 2))).astype(complex)


@dataclass(frozen=True)
class MediumParams:
    """Atomic-medium parameters.

    Rates are in units of 1/T_s, lengths in L_p.  ``Gamma_bc`` is the complex
    ground-state coherence decay gamma_bc - i*Delta (two-photon detuning enters
    as a phase rotation).  ``c`` and ``gp_sqrtN`` may be left as None, in which
    case solvers derive them from the schedule working point: c = 1/cos^2(theta0)
    and gp_sqrtN from the resonant absorption length l_a = c*gamma_ba/gp_sqrtN^2.
    """

    gamma_ba: float = 100.0
    Gamma_bc: complex = 0.0
    Gamma_ca: complex = 0.0
    delta_p: float = 0.0
    l_a: float = 0.1
    gp_sqrtN: float | None = None
    c: float | None = None

    def __post_init__(self) -> None:
        if self.gamma_ba <= 0:
            raise ValueError(f"gamma_ba must be positive, got {self.gamma_ba}")
        if self.l_a < 0:
            raise ValueError(f"l_a must be non-negative, got {self.l_a}")
        if complex(self.Gamma_bc).real < 0:
            raise ValueError("Re(Gamma_bc) must be non-negative")

    def vacuum_speed(self, schedule: CouplingSchedule) -> float:
        """Vacuum light speed in L_p/T_s units (v_g0=1 at the working point)."""
        return self.c if self.c is not None else 1.0 / schedule.cos2_theta0

    def collective_coupling(self, schedule: CouplingSchedule) -> float:
        """gp*sqrt(N) in 1/T_s units, derived from l_a when not given explicitly."""
        if self.gp_sqrtN is not None:
            return self.gp_sqrtN
        if self.l_a <= 0:
            raise ValueError("need l_a > 0 (or an explicit gp_sqrtN) to fix the coupling")
        return math.sqrt(self.vacuum_speed(schedule) * self.gamma_ba / self.l_a)


def _as_complex_samples(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a 1-D array of samples")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


@dataclass(frozen=True)
class PolaritonField:
    """Complex forward/backward polariton envelopes sampled at one time."""

    psi_plus: np.ndarray
    psi_minus: np.ndarray
    time_stamp: float = 0.0

    def __post_init__(self) -> None:
        plus = _as_complex_samples(self.psi_plus, "psi_plus")
        minus = _as_complex_samples(self.psi_minus, "psi_minus")
        if plus.shape != minus.shape:
            raise ValueError("psi_plus and psi_minus must have equal length")
        object.__setattr__(self, "psi_plus", plus)
        object.__setattr__(self, "psi_minus", minus)

    def density(self) -> np.ndarray:
        """Pointwise |psi+|^2 + |psi-|^2."""
        return np.abs(self.psi_plus) ** 2 + np.abs(self.psi_minus) ** 2


@dataclass(frozen=True)
class ProbeField:
    """Complex forward/backward probe envelopes sampled at one time."""

    e_plus: np.ndarray
    e_minus: np.ndarray
    time_stamp: float = 0.0

    def __post_init__(self) -> None:
        plus = _as_complex_samples(self.e_plus, "e_plus")
        minus = _as_complex_samples(self.e_minus, "e_minus")
        if plus.shape != minus.shape:
            raise ValueError("e_plus and e_minus must have equal length")
        object.__setattr__(self, "e_plus", plus)
        object.__setattr__(self, "e_minus", minus)

    def density(self) -> np.ndarray:
        """Pointwise |E+|^2 + |E-|^2."""
        return np.abs(self.e_plus) ** 2 + np.abs(self.e_minus) ** 2
