"""
Pytest configuration for integration testing.

Full trajectories on (0, 40] are expensive, so they are built once per
session and shared.
"""

from fractions import Fraction

import pytest
from click.testing import CliRunner

from libs.dp3.app.core.entities import make_params
from libs.dp3.app.services.integrator import IntegratorConfig, integrate

B = 0.01
TAU_MAX = 40.0


@pytest.fixture(scope="session")
def strong_params():
    """a = -8, b = 1/100 in special mode."""
    return make_params(-8.0, B, 1, special=True)


@pytest.fixture(scope="session")
def oscillating_params():
    """a = -1/8, b = 1/100 in special mode."""
    return make_params(float(Fraction(-1, 8)), B, 1, special=True)


@pytest.fixture(scope="session")
def strong_trajectory(strong_params):
    """a = -8, b = 1/100 on (0, 40]."""
    return integrate(strong_params, IntegratorConfig(tau_max=TAU_MAX))


@pytest.fixture(scope="session")
def oscillating_trajectory(oscillating_params):
    """a = -1/8, b = 1/100 on (0, 40]."""
    return integrate(oscillating_params, IntegratorConfig(tau_max=TAU_MAX))


@pytest.fixture(params=["strong", "oscillating"])
def trajectory(request, strong_trajectory, oscillating_trajectory):
    """Each of the two long trajectories in turn."""
    return {"strong": strong_trajectory, "oscillating": oscillating_trajectory}[
        request.param
    ]


@pytest.fixture
def cli_runner():
    """Click test runner."""
    return CliRunner()


@pytest.fixture
def cli():
    """The dp3 command group."""
    from libs.dp3.app.main import cli

    return cli
