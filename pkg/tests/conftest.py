"""
Pytest configuration file.
"""

import numpy as np
import pytest

from diracbell.physics.minkowski import BoostParams
from tests.helpers import PROPERTY_SEED


@pytest.fixture
def rng():
    """Seeded generator for property tests."""
    return np.random.default_rng(PROPERTY_SEED)


@pytest.fixture
def random_unit(rng):
    """Draw random unit three-vectors from the seeded generator."""

    def _random_unit():
        v = rng.normal(size=3)
        return v / np.linalg.norm(v)

    return _random_unit


@pytest.fixture
def random_boost(rng, random_unit):
    """Draw random boosts: speed in [0, 0.999], arbitrary direction and mass."""

    def _random_boost(speed=None):
        return BoostParams(
            speed=float(rng.uniform(0.0, 0.999)) if speed is None else speed,
            direction=tuple(random_unit()),
            mass=float(rng.uniform(0.5, 2.0)),
        )

    return _random_boost


@pytest.fixture
def z_boost():
    """Boost along z with beta 0.6 (gamma 1.25)."""
    return BoostParams(speed=0.6, direction=(0.0, 0.0, 1.0))
