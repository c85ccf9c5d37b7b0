"""
Pytest configuration for dp3 unit tests.
"""

import pytest

from ..app.core.entities import SolutionPoint, make_params


@pytest.fixture
def special_params():
    """a = -1/8, b = 1/100: the oscillating regime."""
    return make_params(-0.125, 0.01, 1, special=True)


@pytest.fixture
def strong_params():
    """a = -8, b = 1/100: the monotone regime."""
    return make_params(-8.0, 0.01, 1, special=True)


@pytest.fixture
def general_params():
    """Generic real parameters outside special mode."""
    return make_params(-0.5, 0.4, 1)


@pytest.fixture
def generic_point():
    """An arbitrary phase point; transform identities hold at any point."""
    return SolutionPoint(tau=0.7, u=0.3, du=-0.2)
