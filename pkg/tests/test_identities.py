"""
Exact identities along the integrated special solutions.
"""

import math

import numpy as np
import pytest

from libs.dp3.app.services.dynamics import (
    backlund_residual,
    f_form_residual,
    f_formula_gap,
    f_jet,
    inverse_f_to_u,
)
from libs.dp3.app.services.integrator import dense_residual, sample_at
from libs.dp3.app.services.origin_series import build_series

RTOL = 1e-10


def _samples(traj, lo, hi, count=50):
    return [sample_at(traj, t).point for t in np.linspace(lo, hi, count)]


@pytest.mark.integration
class TestIntegralIdentities:
    """Relations between I1 and I2 along the solution."""

    def test_real_part_is_scaled_i1(self, trajectory):
        """Test Re I2 = (b/8) I1 at every sample."""
        b = trajectory.params.b
        for state in trajectory.samples[1:]:
            assert abs(state.re_identity_gap(b)) <= 10 * RTOL * abs(state.i1)

    def test_imaginary_part_closed_form(self, trajectory):
        """Test Im I2 = -(b/8)[ln(u/tau) - ln c1] at every sample."""
        a, b = trajectory.params.a_real, trajectory.params.b
        log_c1 = math.log(b / (-2 * a))
        for state in trajectory.samples:
            expected = -b / 8 * (math.log(state.point.u / state.tau) - log_c1)
            assert abs(state.i2.im - expected) <= 10 * RTOL


@pytest.mark.integration
class TestStructure:
    """Qualitative properties of the integrated solution."""

    def test_positive_and_pole_free(self, trajectory):
        """Test u is positive and bounded on (0, 40]."""
        u = np.array([s.point.u for s in trajectory.samples])
        assert np.all(u > 0)
        assert np.all(u < 1.0)
        assert trajectory.taus[-1] == 40.0

    def test_seed(self, trajectory):
        """Test the run starts from c1 = -b/(2a) at tau0."""
        params = trajectory.params
        series = build_series(params)
        assert series.coeffs[0] == -params.b / (2 * params.a_real)
        first = trajectory.samples[0]
        assert first.tau == pytest.approx(0.1)
        assert first.point.du == pytest.approx(series.coeffs[0], rel=0.05)

    def test_dense_output_residual(self, trajectory):
        """Test the interpolant solves the equation at every sample."""
        worst = max(dense_residual(trajectory, t) for t in trajectory.taus)
        assert worst <= 1e-7
        assert trajectory.diagnostics.max_residual == pytest.approx(worst)


@pytest.mark.integration
class TestTransformsOnSolution:
    """Transforms evaluated on the integrated solution."""

    def test_f_form(self, trajectory):
        """Test f built from the solution satisfies the f-form equation."""
        params = trajectory.params
        for point in _samples(trajectory, 0.5, 40.0):
            f, df, ddf = f_jet(params, point)
            assert f_form_residual(params, f, df, ddf, point.tau).relative <= 1e-6

    def test_inverse_round_trip(self, trajectory):
        """Test u is recovered from (f, f', f'')."""
        params = trajectory.params
        for point in _samples(trajectory, 0.5, 40.0):
            f, df, ddf = f_jet(params, point)
            recovered = inverse_f_to_u(params, f, df, ddf, point.tau).u.to_complex()
            assert abs(recovered - point.u) <= 1e-8 * point.u

    def test_two_f_formulas(self, trajectory):
        """Test the two formulas for f agree relative to the bracket scale."""
        params = trajectory.params
        for point in _samples(trajectory, 0.5, 40.0):
            assert f_formula_gap(params, point).relative <= 1e-12

    @pytest.mark.parametrize("sign", [1, -1])
    def test_backlund_residual(self, strong_trajectory, oscillating_trajectory, sign):
        """Test u_+ and u_- solve their shifted equations."""
        for traj, lo in ((strong_trajectory, 1.0), (oscillating_trajectory, 0.5)):
            for point in _samples(traj, lo, 20.0):
                assert backlund_residual(traj.params, point, sign).relative <= 1e-6
