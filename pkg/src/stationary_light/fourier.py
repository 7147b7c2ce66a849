"""Closed-form Fourier coefficients of the standing-wave denominators.

The intensity grating 1 + y*cos(x) (and its square) appears as a denominator
in the coupled-mode reduction; the first two cosine-series coefficients of its
reciprocal powers, a0/a1 and d0/d1, carry the whole effect.  A brute-force
quadrature oracle is provided as an independent check of the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CouplingSchedule

#: Above this modulation depth the closed forms are treated as the pure
#: standing-wave limit (the cosine series does not exist at y = 1).
STANDING_WAVE_EDGE = 1.0 - 1e-9


def _check_y(y: float) -> float:
    y = float(y)
    if not 0.0 <= y < 1.0:
        raise ValueError(f"modulation depth y must lie in [0, 1), got {y}")
    return y


def coeff_a(y: float) -> tuple[float, float]:
    """First two cosine coefficients (a0, a1) of 1/(1 + y*cos x).

    a1 is evaluated in the cancellation-free form -2y/((1+w)w), w=sqrt(1-y^2),
    which equals 2(w-1)/(yw) and extends continuously to a1(0) = 0.
    """
    y = _check_y(y)
    w = math.sqrt(1.0 - y * y)
    a0 = 2.0 / w
    a1 = -2.0 * y / ((1.0 + w) * w)
    return a0, a1


def coeff_d(y: float) -> tuple[float, float]:
    """First two cosine coefficients (d0, d1) of 1/(1 + y*cos x)^2."""
    y = _check_y(y)
    w2 = 1.0 - y * y
    d0 = 2.0 / w2 ** 1.5
    return d0, -y * d0


@dataclass(frozen=True)
class FourierCoefficients:
    """a0, a1, d0, d1 and the derived ratios s, s', s'' at one modulation depth."""

    y: float
    a0: float
    a1: float
    d0: float
    d1: float
    s: float
    s_prime: float
    s_dprime: float


def fourier_coefficients(y: float) -> FourierCoefficients:
    """All grating coefficients and ratios for modulation depth y in [0, 1)."""
    a0, a1 = coeff_a(y)
    d0, d1 = coeff_d(y)
    return FourierCoefficients(
        y=y, a0=a0, a1=a1, d0=d0, d1=d1,
        s=a1 / a0, s_prime=d0 / a0, s_dprime=d1 / a0,
    )


def quadrature_oracle(n: int, y: float, power: int = 1) -> float:
    """(1/pi) * integral of cos(n x)/(1 + y cos x)^power over [-pi, pi].

    Composite (trapezoidal, hence spectrally convergent on the periodic
    integrand) quadrature, refined by doubling until two successive
    refinements agree to 1e-12.  Deliberately independent of the closed
    forms so it can serve as their oracle.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"harmonic index n must be a non-negative integer, got {n}")
    if power not in (1, 2):
        raise ValueError(f"power must be 1 or 2, got {power}")
    y = float(y)
    if not 0.0 <= y <= 1.0 - 1e-6:
        raise ValueError(f"y must lie in [0, 1 - 1e-6], got {y}")

    previous = None
    samples = 64
    while samples <= 1 << 22:
        x = -math.pi + 2.0 * math.pi * np.arange(samples) / samples
        integrand = np.cos(n * x) / (1.0 + y * np.cos(x)) ** power
        value = 2.0 * float(integrand.mean())
        if previous is not None and abs(value - previous) < 1e-12:
            return value
        previous = value
        samples *= 2
    raise RuntimeError(
        f"quadrature did not converge to 1e-12 for n={n}, y={y}, power={power}; "
        "y is too close to the standing-wave limit"
    )


def beta(schedule: CouplingSchedule) -> float:
    """Splitting speed factor sqrt(|k+|^2 (|k+|^2 - |k-|^2)) of the cold solution."""
    kp2 = schedule.kappa_plus_sq
    km2 = schedule.kappa_minus_sq
    if kp2 < km2:
        raise ValueError(
            "beta requires |kappa+| >= |kappa-|; mirror the problem (z -> -z, "
            "kappa+ <-> kappa-) for the opposite ordering"
        )
    return math.sqrt(kp2 * (kp2 - km2))


@dataclass(frozen=True)
class DispersionParams:
    """Mode-propagator ingredients on a wavenumber axis.

    ``lambda_plus``/``lambda_minus`` are the per-wavenumber mode speeds
    (complex: the imaginary part is the diffusive damping), ``b`` the
    cross-coupling amplitude, ``d`` the splitting root, and ``xi`` the
    dispersion length.
    """

    q: np.ndarray
    xi: float
    beta: float
    b: np.ndarray
    d: np.ndarray
    lambda_plus: np.ndarray
    lambda_minus: np.ndarray


def _enforce_continuity(d: np.ndarray, q: np.ndarray) -> np.ndarray:
    # Flip the sign of the principal root where needed so d(q) is continuous
    # along the sampled axis (walked in q-sorted order, FFT ordering kept).
    if d.size < 2:
        return d
    order = np.argsort(q)
    ds = d[order].copy()
    for i in range(1, ds.size):
        if abs(ds[i] - ds[i - 1]) > abs(ds[i] + ds[i - 1]):
            ds[i] = -ds[i]
    out = np.empty_like(d)
    out[order] = ds
    return out


def dispersion_params(
    schedule: CouplingSchedule,
    l_a: float,
    q: np.ndarray | float,
) -> DispersionParams:
    """Dispersion length, cross-coupling, and mode speeds at wavenumbers q.

    Requires |kappa+| >= |kappa-| and a sub-unity modulation depth; the pure
    standing wave has no dispersive correction and is handled separately by
    its consumers.
    """
    if l_a < 0:
        raise ValueError(f"l_a must be non-negative, got {l_a}")
    kp2 = schedule.kappa_plus_sq
    km2 = schedule.kappa_minus_sq
    if kp2 < km2:
        raise ValueError("dispersion_params requires |kappa+| >= |kappa-|")
    y = schedule.y
    q_arr = np.atleast_1d(np.asarray(q, dtype=float))

    if l_a == 0.0:
        xi = 0.0
    else:
        if y > STANDING_WAVE_EDGE:
            raise ValueError(
                "dispersion length diverges for a pure standing wave; use the "
                "standing-wave limit solution instead"
            )
        xi = kp2 * l_a / math.sqrt(1.0 - y * y)

    beta_val = math.sqrt(kp2 * (kp2 - km2))
    cross = schedule.kappa_plus * np.conj(schedule.kappa_minus)
    b = cross * (1.0 - 1j * q_arr * xi)
    d = np.sqrt((beta_val ** 2 - kp2 * km2 * xi ** 2 * q_arr ** 2).astype(complex))
    d = _enforce_continuity(d, q_arr)
    drift = 1j * kp2 * xi * q_arr
    return DispersionParams(
        q=q_arr,
        xi=xi,
        beta=beta_val,
        b=b,
        d=d,
        lambda_plus=drift + d,
        lambda_minus=drift - d,
    )
