"""
Tests for four-vector kinematics.
"""

import math

import numpy as np
import pytest

from diracbell.core.constants import BETA_MAX
from diracbell.physics.minkowski import (
    METRIC,
    BoostParams,
    BoostRangeError,
    boost_four_vector,
    boost_matrix,
    four_momentum,
    lower_index,
    minkowski_dot,
    polarization_vector,
    polarization_vectors,
)
from tests.helpers import X_HAT, Z_HAT, assert_close


class TestMinkowskiDot:
    """Test the (+,-,-,-) inner product."""

    def test_timelike_unit(self):
        assert minkowski_dot(np.array([1.0, 0, 0, 0]), np.array([1.0, 0, 0, 0])) == 1.0

    def test_spacelike_unit(self):
        assert minkowski_dot(np.array([0, 0, 0, 1.0]), np.array([0, 0, 0, 1.0])) == -1.0

    def test_lower_index_flips_spatial_signs(self):
        assert_close(lower_index([1.0, 2.0, 3.0, 4.0]), [1.0, -2.0, -3.0, -4.0], 0.0)

    def test_symmetric_and_bilinear(self, rng):
        for _ in range(100):
            x, y, z = rng.normal(size=(3, 4))
            alpha = float(rng.normal())
            assert minkowski_dot(x, y) == pytest.approx(minkowski_dot(y, x), abs=1e-12)
            combined = minkowski_dot(alpha * x + y, z)
            expected = alpha * minkowski_dot(x, z) + minkowski_dot(y, z)
            assert combined == pytest.approx(expected, abs=1e-12)


class TestBoostParams:
    """Test boost validation and derived kinematics."""

    @pytest.mark.parametrize("speed", [-0.1, 1.0, 0.9999991, math.nan, math.inf])
    def test_out_of_range_speed_raises(self, speed):
        with pytest.raises(BoostRangeError):
            BoostParams(speed=speed)

    def test_cap_is_accepted(self):
        boost = BoostParams(speed=BETA_MAX)
        assert boost.gamma > 700.0

    def test_non_positive_mass_raises(self):
        with pytest.raises(ValueError, match="mass must be positive"):
            BoostParams(speed=0.5, mass=0.0)

    def test_zero_direction_raises(self):
        with pytest.raises(ValueError, match="zero vector"):
            BoostParams(speed=0.5, direction=(0.0, 0.0, 0.0))

    def test_direction_is_normalized(self):
        boost = BoostParams(speed=0.5, direction=(0.0, 0.0, 2.0))
        assert boost.direction == (0.0, 0.0, 1.0)

    def test_derived_quantities(self):
        boost = BoostParams(speed=0.6, direction=(1.0, 0.0, 0.0), mass=2.0)
        assert boost.gamma == pytest.approx(1.25, abs=1e-15)
        assert boost.energy == pytest.approx(2.5, abs=1e-15)
        assert boost.momentum_magnitude == pytest.approx(1.5, abs=1e-15)
        assert_close(boost.velocity, [0.6, 0.0, 0.0], 1e-15)
        assert boost.rapidity == pytest.approx(math.log(2.0), abs=1e-15)

    def test_momentum_is_a_copy(self):
        boost = BoostParams(speed=0.6)
        boost.momentum[2] = 99.0
        assert boost.momentum[2] == pytest.approx(0.75)

    def test_boosts_are_hashable_and_comparable(self):
        assert BoostParams(speed=0.3) == BoostParams(speed=0.3)
        assert len({BoostParams(speed=0.3), BoostParams(speed=0.3)}) == 1


class TestFourMomentum:
    """Test four_momentum examples and mass shell."""

    def test_rest_frame(self):
        assert_close(four_momentum(BoostParams()), [1.0, 0.0, 0.0, 0.0], 0.0)

    def test_z_boost(self, z_boost):
        assert_close(four_momentum(z_boost), [1.25, 0.0, 0.0, 0.75], 1e-15)

    def test_x_boost_heavy(self):
        boost = BoostParams(speed=0.8, direction=(1.0, 0.0, 0.0), mass=2.0)
        assert_close(four_momentum(boost), [10.0 / 3.0, 8.0 / 3.0, 0.0, 0.0], 1e-14)

    def test_mass_shell(self, random_boost):
        for _ in range(100):
            boost = random_boost()
            p = four_momentum(boost)
            tolerance = 1e-10 * boost.gamma**2
            assert abs(minkowski_dot(p, p) - boost.mass**2) <= tolerance


class TestBoostMatrix:
    """Test the standard boost matrix."""

    def test_preserves_metric(self, random_boost):
        for _ in range(50):
            boost = random_boost()
            lam = boost_matrix(boost)
            assert_close(lam.T @ METRIC @ lam, METRIC, 1e-12 * boost.gamma**2)

    def test_maps_rest_momentum(self, random_boost):
        for _ in range(50):
            boost = random_boost()
            rest = np.array([boost.mass, 0.0, 0.0, 0.0])
            assert_close(boost_four_vector(rest, boost), four_momentum(boost), 1e-12 * boost.gamma)

    def test_identity_at_rest(self):
        assert_close(boost_matrix(BoostParams()), np.eye(4), 0.0)


class TestPolarizationVector:
    """Test the boosted polarization four-vector."""

    def test_parallel_to_boost(self, z_boost):
        assert_close(polarization_vector(Z_HAT, z_boost), [0.75, 0.0, 0.0, 1.25], 1e-15)

    def test_perpendicular_to_boost(self, z_boost):
        assert_close(polarization_vector(X_HAT, z_boost), [0.0, 1.0, 0.0, 0.0], 1e-15)

    def test_rest_frame_is_spatial(self):
        assert_close(polarization_vector(X_HAT, BoostParams()), [0.0, 1.0, 0.0, 0.0], 0.0)

    def test_normalization_and_orthogonality(self, random_boost, random_unit):
        for _ in range(200):
            boost = random_boost()
            s = polarization_vector(random_unit(), boost)
            p = four_momentum(boost)
            assert abs(minkowski_dot(s, s) + 1.0) < 1e-9
            assert abs(minkowski_dot(s, p)) < 1e-9

    def test_equals_boosted_rest_vector(self, random_boost, random_unit):
        for _ in range(200):
            boost = random_boost()
            n = random_unit()
            boosted = boost_four_vector(np.concatenate(([0.0], n)), boost)
            assert_close(boosted, polarization_vector(n, boost), 1e-10)

    def test_batch_matches_single(self, random_boost, random_unit):
        boost = random_boost()
        directions = np.stack([random_unit() for _ in range(5)])
        batch = polarization_vectors(directions, boost)
        for row, n in zip(batch, directions):
            assert_close(row, polarization_vector(n, boost), 1e-15)

    def test_non_unit_direction_raises(self, z_boost):
        with pytest.raises(ValueError, match="unit vector"):
            polarization_vector(np.array([1.0, 1.0, 0.0]), z_boost)
