import math

import numpy as np
import pytest

from stationary_light import (
    CouplingSchedule,
    MediumParams,
    PolaritonField,
    SimulationGrid,
    cos2_theta,
    displacement_r,
    gaussian_profile,
    group_velocity,
)


def quad_group_velocity(schedule, t1, t2, rtol=1e-13):
    """Independent composite quadrature of v_g over [t1, t2], refined to rtol."""
    previous = None
    n = 64
    while n <= 1 << 22:
        t = np.linspace(t1, t2, n + 1)
        value = np.trapezoid(group_velocity(schedule, t), t)
        if previous is not None and abs(value - previous) <= rtol * max(1.0, abs(value)):
            return value
        previous = value
        n *= 2
    raise AssertionError("quadrature did not converge")


class TestCos2Theta:
    def test_zero_at_switch_on(self):
        sched = CouplingSchedule.from_intensities(0.5)
        assert cos2_theta(sched, 0.0) == 0.0

    def test_saturates(self):
        sched = CouplingSchedule.from_intensities(0.5)
        assert cos2_theta(sched, 50.0) == pytest.approx(sched.cos2_theta0, rel=1e-12)

    def test_value_at_one_switching_time(self):
        sched = CouplingSchedule.from_intensities(0.5)
        # 0.01 * tanh(1)
        assert cos2_theta(sched, 1.0) == pytest.approx(0.0076159415595576485, abs=1e-12)

    def test_rejects_negative_time(self):
        sched = CouplingSchedule.from_intensities(0.5)
        with pytest.raises(ValueError):
            cos2_theta(sched, -0.1)
        with pytest.raises(ValueError):
            displacement_r(sched, -1.0)

    def test_constant_schedule(self):
        sched = CouplingSchedule.from_intensities(0.5, schedule_kind="constant")
        assert cos2_theta(sched, 0.0) == sched.cos2_theta0
        assert cos2_theta(sched, 7.3) == sched.cos2_theta0

    def test_vectorized(self):
        sched = CouplingSchedule.from_intensities(0.5)
        t = np.array([0.0, 1.0, 2.0])
        np.testing.assert_allclose(
            cos2_theta(sched, t), sched.cos2_theta0 * np.tanh(t), rtol=1e-15
        )


class TestDisplacement:
    def test_zero_at_zero(self):
        sched = CouplingSchedule.from_intensities(0.5)
        assert displacement_r(sched, 0.0) == 0.0

    def test_value_at_one_switching_time(self):
        sched = CouplingSchedule.from_intensities(0.5)
        # log(cosh(1)), v_g0 * T_s = 1
        assert displacement_r(sched, 1.0) == pytest.approx(0.4337808304830271, abs=1e-12)

    def test_slope_saturates_at_group_velocity(self):
        sched = CouplingSchedule.from_intensities(0.5)
        slope = (displacement_r(sched, 25.0) - displacement_r(sched, 20.0)) / 5.0
        assert slope == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("kind", ["tanh_switch", "constant"])
    @pytest.mark.parametrize("t1,t2", [(0.0, 1.0), (0.5, 3.0), (2.0, 9.0)])
    def test_matches_quadrature(self, kind, t1, t2):
        sched = CouplingSchedule.from_intensities(0.5, schedule_kind=kind)
        expected = quad_group_velocity(sched, t1, t2)
        got = displacement_r(sched, t2) - displacement_r(sched, t1)
        assert got == pytest.approx(expected, rel=1e-10)

    def test_monotone(self):
        sched = CouplingSchedule.from_intensities(0.5)
        r = displacement_r(sched, np.linspace(0.0, 12.0, 200))
        assert np.all(np.diff(r) >= 0)

    def test_no_overflow_at_large_time(self):
        sched = CouplingSchedule.from_intensities(0.5)
        assert displacement_r(sched, 1e4) == pytest.approx(1e4 - math.log(2.0), rel=1e-12)


class TestCouplingSchedule:
    def test_normalization(self):
        sched = CouplingSchedule(0.9 * np.exp(0.3j), 0.5)
        assert abs(sched.kappa_plus) ** 2 + abs(sched.kappa_minus) ** 2 == pytest.approx(
            1.0, abs=1e-12
        )

    def test_y_and_phi_reconstruction(self):
        kp, km = 0.9 * np.exp(0.3j), 0.5
        sched = CouplingSchedule(kp, km)
        total = abs(kp) ** 2 + abs(km) ** 2
        assert sched.y == pytest.approx(2 * abs(kp) * abs(km) / total, abs=1e-12)
        assert sched.phi == pytest.approx(0.3, abs=1e-12)

    def test_y_range(self):
        for kp_sq in (0.0, 0.3, 0.5, 0.9, 1.0):
            sched = CouplingSchedule.from_intensities(kp_sq)
            assert 0.0 <= sched.y <= 1.0

    def test_from_intensities_validation(self):
        with pytest.raises(ValueError):
            CouplingSchedule.from_intensities(1.2)
        with pytest.raises(ValueError):
            CouplingSchedule.from_intensities(-0.1)
        with pytest.raises(ValueError):
            CouplingSchedule.from_intensities(0.5, kappa_minus_sq=-0.2)

    def test_rejects_zero_amplitudes(self):
        with pytest.raises(ValueError):
            CouplingSchedule(0.0, 0.0)

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            CouplingSchedule.from_intensities(0.5, schedule_kind="ramp")

    def test_group_velocity_saturates_to_unity(self):
        sched = CouplingSchedule.from_intensities(0.5)
        assert group_velocity(sched, 40.0) == pytest.approx(1.0, rel=1e-12)


class TestGaussianProfile:
    def test_peak_and_width(self):
        grid = SimulationGrid(z_min=-8.0, z_max=8.0, n_z=256)
        profile = gaussian_profile(grid, amplitude=2.0, pulse_length=1.0)
        z = grid.z
        i0 = np.argmin(np.abs(z))
        assert profile[i0] == pytest.approx(2.0)
        i1 = np.argmin(np.abs(z - 1.0))
        assert profile[i1] == pytest.approx(2.0 * math.exp(-1.0), rel=1e-14)

    def test_density_integral(self):
        # integral of |profile|^2 = |amp|^2 * L * sqrt(pi/2), checked by quadrature
        grid = SimulationGrid(z_min=-10.0, z_max=10.0, n_z=2048)
        profile = gaussian_profile(grid, amplitude=1.5, pulse_length=1.0)
        integral = grid.dz * np.sum(np.abs(profile) ** 2)
        assert integral == pytest.approx(1.5 ** 2 * math.sqrt(math.pi / 2), rel=1e-12)

    def test_even_about_center(self):
        grid = SimulationGrid(z_min=-8.0, z_max=8.0, n_z=256)
        profile = gaussian_profile(grid, center=1.0)
        i0 = np.argmin(np.abs(grid.z - 1.0))
        for offset in (1, 5, 20, 60):
            assert profile[i0 + offset] == profile[i0 - offset]

    def test_rejects_bad_width(self):
        grid = SimulationGrid()
        with pytest.raises(ValueError):
            gaussian_profile(grid, pulse_length=0.0)
        with pytest.raises(ValueError):
            gaussian_profile(grid, pulse_length=-1.0)


class TestValueTypes:
    def test_grid_validation(self):
        with pytest.raises(ValueError):
            SimulationGrid(n_z=8)
        with pytest.raises(ValueError):
            SimulationGrid(z_min=1.0, z_max=-1.0)
        grid = SimulationGrid(z_min=-10.0, z_max=10.0, n_z=2048)
        assert grid.dz == pytest.approx(20.0 / 2048)
        assert grid.z.shape == (2048,)

    def test_polariton_field_validation(self):
        with pytest.raises(ValueError):
            PolaritonField(np.zeros(4, complex), np.zeros(5, complex))
        bad = np.array([1.0, np.nan], dtype=complex)
        with pytest.raises(ValueError):
            PolaritonField(bad, np.zeros(2, complex))

    def test_polariton_density(self):
        field = PolaritonField(np.array([1 + 1j, 0]), np.array([0, 2j]))
        np.testing.assert_allclose(field.density(), [2.0, 4.0])

    def test_medium_validation(self):
        with pytest.raises(ValueError):
            MediumParams(gamma_ba=0.0)
        with pytest.raises(ValueError):
            MediumParams(l_a=-0.1)
        with pytest.raises(ValueError):
            MediumParams(Gamma_bc=-0.1 + 0.2j)

    def test_medium_derived_coupling(self):
        sched = CouplingSchedule.from_intensities(0.5)
        med = MediumParams(gamma_ba=100.0, l_a=0.1)
        c = med.vacuum_speed(sched)
        assert c == pytest.approx(100.0, rel=1e-12)
        g = med.collective_coupling(sched)
        assert c * med.gamma_ba / g ** 2 == pytest.approx(med.l_a, rel=1e-12)
