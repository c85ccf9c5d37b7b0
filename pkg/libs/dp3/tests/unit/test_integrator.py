"""
Adaptive Dormand-Prince integration of the special solution.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from ...app.core.entities import make_params
from ...app.core.exceptions import OutOfRange, SpecialModeViolation, StepLimitExceeded
from ...app.services.integrator import (
    IntegratorConfig,
    _sample_grid,
    dense_residual,
    integrate,
    sample_at,
)
from ...app.services.origin_series import build_series, eval_u

SHORT = IntegratorConfig(tau_max=3.0)


@pytest.fixture(scope="module")
def short_trajectory():
    """a = -1/8 on (0, 3], shared by the module."""
    return integrate(make_params(-0.125, 0.01, 1, special=True), SHORT)


@pytest.mark.unit
class TestIntegratorConfig:
    """Unit tests for IntegratorConfig validation."""

    def test_defaults(self):
        """Test the default tolerances and interval."""
        cfg = IntegratorConfig()
        assert cfg.rtol == 1e-10
        assert cfg.atol == 1e-12
        assert cfg.tau0 == 0.1
        assert cfg.tau_max == 40.0

    def test_interval_must_be_ordered(self):
        """Test tau0 beyond tau_max is a validation error."""
        with pytest.raises(ValidationError):
            IntegratorConfig(tau0=5.0, tau_max=1.0)

    def test_positive_tolerances(self):
        """Test a zero rtol is a validation error."""
        with pytest.raises(ValidationError):
            IntegratorConfig(rtol=0.0)

    def test_step_cap(self):
        """Test the step cap min(max_step, 0.25 tau^(1/3))."""
        cfg = IntegratorConfig(max_step=1.0)
        assert cfg.step_cap(8.0) == pytest.approx(0.5)
        assert cfg.step_cap(1e6) == 1.0

    def test_frozen(self):
        """Test the config is immutable."""
        with pytest.raises(ValidationError):
            SHORT.rtol = 1.0  # type: ignore[misc]


@pytest.mark.unit
def test_sample_grid():
    """Test the sampling grid includes both endpoints exactly."""
    grid = _sample_grid(0.1, 0.4, 0.05)
    np.testing.assert_allclose(grid, [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4])
    assert grid[0] == 0.1
    assert grid[-1] == 0.4


@pytest.mark.unit
class TestIntegrate:
    """Unit tests for the adaptive integration on a short interval."""

    def test_requires_special_mode(self):
        """Test general-mode parameters are rejected."""
        with pytest.raises(SpecialModeViolation):
            integrate(make_params(-0.125, 0.01), SHORT)

    def test_step_limit(self):
        """Test the step budget is enforced."""
        cfg = IntegratorConfig(tau_max=3.0, max_steps=3)
        with pytest.raises(StepLimitExceeded):
            integrate(make_params(-0.125, 0.01, 1, special=True), cfg)

    def test_diagnostics(self, short_trajectory):
        """Test step counts, evaluations and the recorded residual."""
        diag = short_trajectory.diagnostics
        assert diag.steps > 0
        assert diag.rejected_steps >= 0
        assert diag.function_evaluations == 1 + 6 * (diag.steps + diag.rejected_steps)
        assert diag.tau0 == pytest.approx(0.1)
        assert diag.max_residual < 1e-7

    def test_sample_grid_endpoints(self, short_trajectory):
        """Test the recorded taus start at tau0 and end at tau_max."""
        taus = short_trajectory.taus
        assert taus[0] == pytest.approx(0.1)
        assert taus[-1] == 3.0
        assert short_trajectory.tau_max == pytest.approx(3.0, rel=1e-15)
        assert np.all(np.diff(taus) > 0)

    def test_arrays_layout(self, short_trajectory):
        """Test the shapes of the tabulated and evaluated arrays."""
        table = short_trajectory.arrays()
        assert table.shape == (len(short_trajectory.samples), 6)
        assert table[-1, 0] == 3.0
        values = short_trajectory.evaluate([1.0, 2.0])
        assert values.shape == (2, 5)

    def test_positive_solution(self, short_trajectory):
        """Test u stays positive."""
        assert all(s.point.u > 0 for s in short_trajectory.samples)

    def test_dense_output_solves_equation(self, short_trajectory):
        """Test the interpolant satisfies the equation between steps."""
        for tau in np.linspace(0.11, 2.99, 37):
            assert dense_residual(short_trajectory, tau) < 1e-7

    def test_dense_output_hits_step_endpoints(self, short_trajectory):
        """Test the interpolant reproduces the state at a step start."""
        start, h = short_trajectory.segments[3]
        state = sample_at(short_trajectory, start)
        np.testing.assert_allclose(
            [state.point.u, state.point.du], short_trajectory.coefficients[3, 0, :2]
        )

    def test_real_part_identity(self, short_trajectory):
        """Test Re I2 = (b/8) I1 along the run."""
        for state in short_trajectory.samples[1:]:
            assert abs(state.re_identity_gap(0.01)) <= 10 * SHORT.rtol * abs(state.i1)

    def test_imaginary_part_closed_form(self, short_trajectory):
        """Test Im I2 against -(b/8)[ln(u/tau) - ln c1]."""
        c1 = 0.01 / (2 * 0.125)
        for state in short_trajectory.samples:
            expected = -0.01 / 8 * (math.log(state.point.u / state.tau) - math.log(c1))
            assert state.i2.im == pytest.approx(expected, abs=10 * SHORT.rtol)

    def test_matches_series_after_handoff(self, short_trajectory):
        """Test the integrated state agrees with the series at 2 tau0."""
        series = build_series(short_trajectory.params)
        u_series, du_series = eval_u(series, 0.2)
        state = sample_at(short_trajectory, 0.2)
        assert state.point.u == pytest.approx(u_series, rel=1e-9)
        assert state.point.du == pytest.approx(du_series, rel=1e-8)

    def test_out_of_range(self, short_trajectory):
        """Test sampling outside [tau0, tau_max] fails."""
        with pytest.raises(OutOfRange):
            sample_at(short_trajectory, 5.0)
        with pytest.raises(OutOfRange):
            sample_at(short_trajectory, 0.01)

    def test_tolerance_convergence(self, short_trajectory):
        """Test a looser tolerance stays close with fewer steps."""
        params = short_trajectory.params
        loose = integrate(params, IntegratorConfig(tau_max=3.0, rtol=1e-7, atol=1e-10))
        gap = abs(loose.samples[-1].point.u - short_trajectory.samples[-1].point.u)
        assert gap <= 1e-6 * short_trajectory.samples[-1].point.u
        assert loose.diagnostics.steps <= short_trajectory.diagnostics.steps

    def test_deterministic(self, short_trajectory):
        """Test two identical runs give identical arrays."""
        again = integrate(short_trajectory.params, SHORT)
        np.testing.assert_array_equal(again.arrays(), short_trajectory.arrays())

    def test_midpoint_matches_reintegration(self, short_trajectory):
        """Test the interpolant against a run ending at the same tau."""
        tau = 1.025
        direct = integrate(short_trajectory.params, IntegratorConfig(tau_max=tau))
        interpolated = sample_at(short_trajectory, tau).point.u
        bound = 100 * (SHORT.rtol * interpolated + SHORT.atol)
        assert abs(direct.samples[-1].point.u - interpolated) <= bound
