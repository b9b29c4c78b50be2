import numpy as np
import pytest

from clarke_kinematics import RobotGeometry


@pytest.fixture
def geometry3():
    return RobotGeometry(n=3, d=0.01, l=0.1)


@pytest.fixture
def geometry4():
    return RobotGeometry(n=4, d=0.01, l=0.1)


def assert_close(actual, desired, rtol=1e-12):
    """Relative comparison with the tolerance anchored to the desired vector."""
    desired = np.asarray(desired, dtype=float)
    scale = float(np.max(np.abs(desired))) if desired.size else 0.0
    np.testing.assert_allclose(actual, desired, rtol=rtol, atol=rtol * max(scale, 1e-300))
