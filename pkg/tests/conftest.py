"""Test configuration and fixtures for blaschke-pick tests."""
import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path for imports
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from blaschke_pick.core import random_admissible_gamma, random_problem  # noqa: E402
from blaschke_pick.problem import BoundaryData  # noqa: E402

PROBLEMS_DIR = Path(__file__).parent / "goldens" / "problems"


def equally_spaced(n: int, offset: float = 0.0):
    """Angles of n equally spaced points starting at ``offset``."""
    return [offset + 2.0 * math.pi * k / n for k in range(n)]


@pytest.fixture
def fixed_point_3():
    """Three boundary fixed points: f(t) = t at cube roots of unity."""
    angles = equally_spaced(3)
    return BoundaryData.from_angles(angles, angles)


@pytest.fixture
def fixed_point_4():
    """Four boundary fixed points at the fourth roots of unity."""
    angles = equally_spaced(4)
    return BoundaryData.from_angles(angles, angles)


@pytest.fixture
def anti_oriented_3():
    """Nodes counter-clockwise, targets clockwise: no degree-one solution."""
    angles = equally_spaced(3)
    return BoundaryData.from_angles(angles, [angles[0], angles[2], angles[1]])


@pytest.fixture
def constant_3():
    """Every target equal to 1."""
    return BoundaryData.from_angles(equally_spaced(3), [0.0, 0.0, 0.0])


@pytest.fixture
def generic_3():
    """Three nodes with unrelated targets."""
    return BoundaryData.from_angles([0.3, 2.1, 4.0], [1.0, 5.2, 2.9])


@pytest.fixture
def generic_6():
    """Six nodes with unrelated targets."""
    return BoundaryData.from_angles(
        [0.1, 1.2, 2.0, 3.1, 4.4, 5.5],
        [2.5, 0.3, 4.0, 1.1, 5.9, 3.3],
    )


@pytest.fixture
def uniform_4():
    """w₁ = w₂ = w₃ = i and a different last target."""
    half_pi = math.pi / 2
    return BoundaryData.from_angles([0.4, 1.9, 3.3, 5.0], [half_pi, half_pi, half_pi, 2.7])


@pytest.fixture
def rng():
    """Seeded numpy Generator."""
    return np.random.default_rng(20240607)


@pytest.fixture
def random_instance(rng):
    """Factory for (data, admissible gamma) pairs with n nodes."""

    def make(n: int):
        data = random_problem(rng, n)
        return data, random_admissible_gamma(rng, data)

    return make


@pytest.fixture
def problems_dir():
    """Directory of canned problem files."""
    return PROBLEMS_DIR


# Test markers for different test categories
def pytest_configure(config):
    """Configure custom pytest markers."""
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "slow: mark test as a slow randomized property test")
    config.addinivalue_line("markers", "record_golden: mark test for golden test recording")
