"""Scalar diagnostics of simulated fields: moments, norms, split fractions,
peak tracking, and the width-growth regression used by the diffusion checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import CouplingSchedule, PolaritonField, ProbeField, SimulationGrid, displacement_r


@dataclass(frozen=True)
class PulseMetrics:
    """Moments of the two-component energy density over the grid.

    ``centroid``, ``variance``, ``peak_position`` and the split fractions are
    None when the total norm vanishes (metrics undefined).  ``variance`` is
    the statistical variance of the density; for a Gaussian density
    exp(-z^2/W^2) it equals W^2/2.
    """

    total_norm: float
    centroid: float | None
    variance: float | None
    peak_value: float
    peak_position: float | None
    forward_fraction: float | None
    backward_fraction: float | None
    time: float | None = None


def _components(field) -> tuple[np.ndarray, np.ndarray, float | None]:
    if isinstance(field, PolaritonField):
        return field.psi_plus, field.psi_minus, field.time_stamp
    if isinstance(field, ProbeField):
        return field.e_plus, field.e_minus, field.time_stamp
    raise TypeError(f"expected PolaritonField or ProbeField, got {type(field).__name__}")


def compute_metrics(field, grid: SimulationGrid, split_at: float = 0.0) -> PulseMetrics:
    """Trapezoidal moments of |f+|^2 + |f-|^2 plus the energy split about split_at."""
    plus, minus, time = _components(field)
    if plus.shape != (grid.n_z,):
        raise ValueError("field must be sampled on the grid")
    z = grid.z
    density = np.abs(plus) ** 2 + np.abs(minus) ** 2
    # On a uniform periodic grid the trapezoidal rule is dz * sum(samples).
    total = grid.dz * float(np.sum(density))
    peak_index = int(np.argmax(density))
    peak_value = float(density[peak_index])
    if total <= 0.0:
        return PulseMetrics(
            total_norm=0.0, centroid=None, variance=None,
            peak_value=peak_value, peak_position=None,
            forward_fraction=None, backward_fraction=None, time=time,
        )
    centroid = grid.dz * float(np.sum(z * density)) / total
    variance = grid.dz * float(np.sum((z - centroid) ** 2 * density)) / total
    forward_weight = np.where(z > split_at, 1.0, 0.0) + 0.5 * (z == split_at)
    forward = grid.dz * float(np.sum(forward_weight * density)) / total
    return PulseMetrics(
        total_norm=total,
        centroid=centroid,
        variance=variance,
        peak_value=peak_value,
        peak_position=float(z[peak_index]),
        forward_fraction=forward,
        backward_fraction=1.0 - forward,
        time=time,
    )


def variance_growth_rate(
    history: Sequence[PulseMetrics],
    schedule: CouplingSchedule,
) -> float:
    """Least-squares slope of the squared pulse width against displacement r(t).

    The squared width is W^2 = 2 * variance of the density, i.e. the shape
    parameter of a Gaussian density exp(-z^2/W^2); under drift-diffusion with
    coefficient D = D0 * v_g it grows as dW^2/dr = 2 * D0, so a thermally
    broadened standing-wave pulse gives slope 2 * l_a * 4|k+|^2|k-|^2 and a
    dispersionless one gives zero.
    """
    if len(history) < 3:
        raise ValueError("need at least 3 metric samples to fit a growth rate")
    times = []
    widths_sq = []
    for metrics in history:
        if metrics.time is None or metrics.variance is None:
            raise ValueError("metric samples must carry a time and a defined variance")
        times.append(metrics.time)
        widths_sq.append(2.0 * metrics.variance)
    r = np.asarray([float(displacement_r(schedule, t)) for t in times])
    if np.ptp(r) <= 0.0:
        raise ValueError("displacement r(t) is constant over the samples; slope undefined")
    slope, _ = np.polyfit(r, np.asarray(widths_sq), 1)
    return float(slope)
