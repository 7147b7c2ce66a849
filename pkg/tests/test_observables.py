import math

import numpy as np
import pytest

from stationary_light import (
    CouplingSchedule,
    PolaritonField,
    ProbeField,
    PulseMetrics,
    SimulationGrid,
    beta,
    cold_adiabatic_evolve,
    compute_metrics,
    displacement_r,
    gaussian_profile,
    variance_growth_rate,
)

GRID = SimulationGrid(z_min=-10.0, z_max=10.0, n_z=1024)


def make_field(psi_plus, psi_minus=None, t=0.0):
    if psi_minus is None:
        psi_minus = np.zeros_like(psi_plus)
    return PolaritonField(psi_plus, psi_minus, time_stamp=t)


class TestComputeMetrics:
    def test_gaussian_moments(self):
        # density exp(-2 z^2): centroid 0, variance 1/4 (Gaussian moment integral)
        field = make_field(gaussian_profile(GRID))
        metrics = compute_metrics(field, GRID)
        assert metrics.centroid == pytest.approx(0.0, abs=1e-12)
        assert metrics.variance == pytest.approx(0.25, rel=1e-10)
        assert metrics.total_norm == pytest.approx(math.sqrt(math.pi / 2), rel=1e-10)
        assert metrics.peak_value == pytest.approx(1.0, rel=1e-12)
        assert metrics.peak_position == pytest.approx(0.0, abs=GRID.dz)

    def test_symmetric_density_splits_evenly(self):
        field = make_field(gaussian_profile(GRID))
        metrics = compute_metrics(field, GRID, split_at=0.0)
        assert metrics.forward_fraction == pytest.approx(0.5, abs=1e-9)
        assert metrics.backward_fraction == pytest.approx(0.5, abs=1e-9)

    def test_offset_split(self):
        field = make_field(gaussian_profile(GRID, center=3.0))
        metrics = compute_metrics(field, GRID, split_at=0.0)
        assert metrics.forward_fraction > 0.999

    def test_forward_fraction_of_separated_quasi_standing_pulse(self):
        # closed-form split: forward weight (1 + beta/|k+|^2)/2 of the energy
        sched = CouplingSchedule.from_intensities(0.55)
        field = cold_adiabatic_evolve(gaussian_profile(GRID), GRID, sched, 25.0)
        metrics = compute_metrics(field, GRID, split_at=0.0)
        expected = 0.7132007163556104
        assert metrics.forward_fraction == pytest.approx(expected, abs=1e-6)
        weight = beta(sched) / 0.55
        assert expected == pytest.approx((1 + weight) / 2, abs=1e-12)

    def test_zero_field_flagged_undefined(self):
        field = make_field(np.zeros(GRID.n_z, complex))
        metrics = compute_metrics(field, GRID)
        assert metrics.total_norm == 0.0
        assert metrics.centroid is None
        assert metrics.variance is None
        assert metrics.forward_fraction is None

    def test_phase_invariance(self):
        psi = gaussian_profile(GRID, center=1.0)
        base = compute_metrics(make_field(psi), GRID)
        rotated = compute_metrics(make_field(psi * np.exp(1.3j)), GRID)
        assert rotated.total_norm == pytest.approx(base.total_norm, rel=1e-14)
        assert rotated.centroid == pytest.approx(base.centroid, rel=1e-14)
        assert rotated.variance == pytest.approx(base.variance, rel=1e-14)

    def test_accepts_probe_field(self):
        probe = ProbeField(gaussian_profile(GRID), np.zeros(GRID.n_z, complex), time_stamp=2.0)
        metrics = compute_metrics(probe, GRID)
        assert metrics.time == 2.0

    def test_rejects_other_types(self):
        with pytest.raises(TypeError):
            compute_metrics(np.zeros(GRID.n_z), GRID)

    def test_centroid_of_separated_solution_tracks_weighted_displacement(self):
        # global centroid = (forward - backward weight) * beta * r(t)
        sched = CouplingSchedule.from_intensities(0.55)
        psi0 = gaussian_profile(GRID)
        for t in (20.0, 22.0, 25.0):
            field = cold_adiabatic_evolve(psi0, GRID, sched, t)
            metrics = compute_metrics(field, GRID)
            shift = beta(sched) * displacement_r(sched, t)
            expected = (metrics.forward_fraction - metrics.backward_fraction) * shift
            assert metrics.centroid == pytest.approx(expected, rel=1e-6)


class TestVarianceGrowthRate:
    @staticmethod
    def synthetic_history(schedule, times, w2_of_r):
        history = []
        for t in times:
            r = float(displacement_r(schedule, t))
            history.append(
                PulseMetrics(
                    total_norm=1.0, centroid=0.0, variance=w2_of_r(r) / 2.0,
                    peak_value=1.0, peak_position=0.0,
                    forward_fraction=0.5, backward_fraction=0.5, time=t,
                )
            )
        return history

    def test_recovers_linear_width_growth(self):
        # thermal standing-wave law: W^2 = W0^2 + 2 * l_a * r with l_a = 0.1
        sched = CouplingSchedule.from_intensities(0.5)
        history = self.synthetic_history(sched, np.linspace(0, 8, 9), lambda r: 0.5 + 0.2 * r)
        assert variance_growth_rate(history, sched) == pytest.approx(0.2, rel=1e-10)

    def test_zero_growth(self):
        sched = CouplingSchedule.from_intensities(0.5)
        history = self.synthetic_history(sched, np.linspace(0, 8, 9), lambda r: 0.5)
        assert abs(variance_growth_rate(history, sched)) < 1e-12

    def test_requires_three_samples(self):
        sched = CouplingSchedule.from_intensities(0.5)
        history = self.synthetic_history(sched, [0.0, 1.0], lambda r: 0.5)
        with pytest.raises(ValueError):
            variance_growth_rate(history, sched)

    def test_rejects_constant_displacement(self):
        sched = CouplingSchedule.from_intensities(0.5)
        history = self.synthetic_history(sched, [3.0, 3.0, 3.0], lambda r: 0.5)
        with pytest.raises(ValueError):
            variance_growth_rate(history, sched)

    def test_rejects_undefined_variance(self):
        sched = CouplingSchedule.from_intensities(0.5)
        bad = PulseMetrics(
            total_norm=0.0, centroid=None, variance=None, peak_value=0.0,
            peak_position=None, forward_fraction=None, backward_fraction=None, time=1.0,
        )
        history = self.synthetic_history(sched, [0.0, 1.0], lambda r: 0.5) + [bad]
        with pytest.raises(ValueError):
            variance_growth_rate(history, sched)
