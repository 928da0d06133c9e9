"""
pytest configuration for muntz-spectral.
Provides the parameter bundles of the published experiments and registers markers.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from interpolation import MuntzNodeSet  # noqa: E402
from quadrature import MuntzBasisParams  # noqa: E402


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "slow: paper-scale sweeps (deselect with -m 'not slow')"
    )
    config.addinivalue_line(
        "markers", "integration: end-to-end runs of the command-line interface"
    )


@pytest.fixture
def left_params():
    """Left-matrix experiment: b=10, alpha=-0.5, beta=2, sigma=0.5, eta=0."""
    return MuntzBasisParams.create(-0.5, 2.0, sigma=0.5, eta=0.0, mu=0.5, b=10.0)


@pytest.fixture
def right_params():
    """Right-matrix experiment: b=10, alpha=0.5, beta=-0.5, sigma=eta=0.5."""
    return MuntzBasisParams.create(0.5, -0.5, sigma=0.5, eta=0.5, mu=0.5, b=10.0)


@pytest.fixture
def cauchy_euler_params():
    return MuntzBasisParams.create(-0.5, 1.0, sigma=0.5, eta=-1.0, mu=1.0, b=10.0)


@pytest.fixture
def small_nodeset(left_params):
    return MuntzNodeSet.build(left_params, 12)


@pytest.fixture
def isolated_settings(tmp_path, monkeypatch):
    """Point the settings loader at an empty directory and clear the thread override."""
    monkeypatch.setenv('MUNTZ_SPECTRAL_CONFIG_DIR', str(tmp_path))
    monkeypatch.delenv('MUNTZ_SPECTRAL_THREADS', raising=False)
    return tmp_path
