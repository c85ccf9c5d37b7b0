"""
log-Gamma and argument conventions against mpmath in extended precision.
"""

import cmath
import math

import mpmath
import numpy as np
import pytest

from ...app.core.exceptions import NonPositiveQ2, PoleOfGamma
from ...app.services.special_fns import (
    arg_gamma_continuous,
    arg_gamma_iq2,
    log_gamma,
    log_gamma_complex,
    principal_arg_gamma,
    wrap_angle,
)

mpmath.mp.dps = 30


def _reference(z: complex) -> complex:
    return complex(mpmath.loggamma(mpmath.mpc(z.real, z.imag)))


@pytest.mark.unit
class TestLogGamma:
    """Unit tests for the complex log-Gamma."""

    @pytest.mark.parametrize(
        "z",
        [
            1.0,
            0.5,
            complex(1.0, 1.0),
            complex(1.0, -8.0),
            complex(1.0, 10.0),
            complex(0.2, 3.0),
            complex(7.5, -2.25),
            complex(30.0, 40.0),
            complex(-2.5, 0.5),
        ],
    )
    def test_against_mpmath(self, z):
        """Test ln Gamma against mpmath across the plane."""
        z = complex(z)
        expected = _reference(z)
        assert abs(log_gamma_complex(z) - expected) <= 1e-12 * max(1.0, abs(expected))

    def test_real_on_positive_axis(self):
        """Test ln Gamma(5) = ln 24 with no imaginary part."""
        assert log_gamma_complex(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
        assert log_gamma_complex(5.0).imag == 0.0

    def test_conjugate_symmetry(self):
        """Test ln Gamma(conj z) = conj ln Gamma(z)."""
        z = complex(1.0, 3.7)
        assert log_gamma_complex(z.conjugate()) == pytest.approx(
            log_gamma_complex(z).conjugate(), rel=1e-14
        )

    @pytest.mark.parametrize("z", [0.0, -1.0, -7.0])
    def test_poles(self, z):
        """Test the poles at non-positive integers are rejected."""
        with pytest.raises(PoleOfGamma):
            log_gamma_complex(z)

    def test_non_finite_argument(self):
        """Test a NaN argument is rejected."""
        with pytest.raises(PoleOfGamma):
            log_gamma_complex(complex(math.nan, 1.0))

    def test_wrapper_returns_complex_value(self):
        """Test log_gamma wraps log_gamma_complex."""
        value = log_gamma(complex(1.0, 2.0))
        assert value.to_complex() == log_gamma_complex(complex(1.0, 2.0))

    @pytest.mark.parametrize("a", np.linspace(-10.0, -0.05, 12))
    def test_modulus_identity(self, a):
        """Test |Gamma(1 + ai)|^2 = pi a / sinh(pi a)."""
        # |Gamma(1 + ai)|^2 = pi a / sinh(pi a)
        modulus2 = math.exp(2 * log_gamma_complex(complex(1.0, a)).real)
        assert modulus2 == pytest.approx(math.pi * a / math.sinh(math.pi * a), rel=1e-12)


@pytest.mark.unit
class TestArguments:
    """Unit tests for the branches of arg Gamma."""

    def test_wrap_angle_interval(self):
        """Test wrapping into (-pi, pi]."""
        assert wrap_angle(math.pi) == pytest.approx(math.pi)
        assert wrap_angle(-math.pi) == pytest.approx(math.pi)
        assert wrap_angle(3 * math.pi / 2) == pytest.approx(-math.pi / 2)
        for angle in np.linspace(-20, 20, 41):
            wrapped = wrap_angle(angle)
            assert -math.pi < wrapped <= math.pi
            assert math.cos(wrapped) == pytest.approx(math.cos(angle), abs=1e-12)

    def test_continuous_branch_at_zero(self):
        """Test Arg Gamma(1) = 0."""
        assert arg_gamma_continuous(0.0) == 0.0

    def test_continuous_branch_at_minus_eight(self):
        """Test the continuous value at a = -8 is one turn below the principal one."""
        # the continuous value lies one full turn below the principal one
        continuous = arg_gamma_continuous(-8.0)
        principal = principal_arg_gamma(complex(1.0, -8.0))
        assert continuous == pytest.approx(principal - 2 * math.pi, abs=1e-12)
        assert continuous == pytest.approx(-9.41, abs=0.01)
        assert principal == pytest.approx(-3.13, abs=0.01)

    def test_continuous_branch_matches_mpmath(self):
        """Test the continuous branch against mpmath loggamma."""
        for a in (-0.125, -1.0, -3.0, -8.0):
            expected = float(mpmath.im(mpmath.loggamma(mpmath.mpc(1, a))))
            assert arg_gamma_continuous(a) == pytest.approx(expected, abs=1e-12)

    def test_continuous_branch_has_no_jumps(self):
        """Test the continuous branch has no jumps on [-10, 0]."""
        grid = np.linspace(0.0, -10.0, 10001)
        assert grid[-1] == -10.0
        values = np.array([arg_gamma_continuous(a) for a in grid])
        assert np.max(np.abs(np.diff(values))) < 0.1
        expected = float(mpmath.im(mpmath.loggamma(mpmath.mpc(1, -10))))
        assert values[-1] == pytest.approx(expected, abs=1e-12)

    def test_principal_branch(self):
        """Test the principal argument against mpmath."""
        for z in (complex(1.0, -8.0), complex(0.3, 2.0), complex(4.0, 6.0)):
            expected = float(mpmath.arg(mpmath.gamma(mpmath.mpc(z.real, z.imag))))
            got = principal_arg_gamma(z)
            assert abs(cmath.exp(1j * got) - cmath.exp(1j * expected)) < 1e-11
            assert -math.pi < got <= math.pi

    @pytest.mark.parametrize("q2", [1e-12, 0.01, 0.2, 1.0, 3.5])
    def test_arg_gamma_iq2(self, q2):
        """Test arg Gamma(i q^2) against mpmath."""
        expected = float(mpmath.arg(mpmath.gamma(mpmath.mpc(0, q2))))
        got = arg_gamma_iq2(q2)
        assert abs(cmath.exp(1j * got) - cmath.exp(1j * expected)) < 1e-11

    def test_small_q2_limit(self):
        """Test arg Gamma(i q^2) tends to -pi/2 as q^2 -> 0."""
        # Gamma(i q2) ~ 1/(i q2), argument -> -pi/2
        assert arg_gamma_iq2(1e-14) == pytest.approx(-math.pi / 2, abs=1e-10)

    @pytest.mark.parametrize("q2", [0.0, -1.0, math.nan])
    def test_arg_gamma_iq2_rejects_non_positive(self, q2):
        """Test q^2 <= 0 and NaN are rejected."""
        with pytest.raises(NonPositiveQ2):
            arg_gamma_iq2(q2)
