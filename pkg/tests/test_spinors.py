"""
Tests for rest-frame and boosted Dirac spinors.
"""

import math

import numpy as np
import pytest

from diracbell.core.constants import BETA_MAX
from diracbell.physics.dirac import sigma_spin, slash
from diracbell.physics.minkowski import BoostParams, four_momentum
from diracbell.physics.spinors import (
    ParticleKind,
    SpinLabel,
    boosted_spinor,
    positive_energy_projector_basis,
    rest_spinor,
)
from tests.helpers import assert_close

SPEEDS = (0.0, 0.3, 0.6, 0.9, 0.99, 0.999)


class TestRestSpinors:
    """Test the standard basis spinors."""

    @pytest.mark.parametrize(
        "kind, spin, index",
        [
            (ParticleKind.PARTICLE, SpinLabel.UP, 0),
            (ParticleKind.PARTICLE, SpinLabel.DOWN, 1),
            (ParticleKind.ANTIPARTICLE, SpinLabel.UP, 2),
            (ParticleKind.ANTIPARTICLE, SpinLabel.DOWN, 3),
        ],
    )
    def test_basis_vector(self, kind, spin, index):
        expected = np.zeros(4)
        expected[index] = 1.0
        assert_close(rest_spinor(kind, spin), expected, 0.0)

    def test_sigma3_eigenvalues(self):
        for kind in ParticleKind:
            for spin in SpinLabel:
                spinor = rest_spinor(kind, spin)
                assert_close(sigma_spin(3) @ spinor, 2.0 * spin.value * spinor, 0.0)

    def test_spin_sign(self):
        assert SpinLabel.UP.sign == 1
        assert SpinLabel.DOWN.sign == -1


class TestBoostedSpinor:
    """Test u(p, ±½) normalization and the Dirac equation."""

    def test_z_boost_example(self, z_boost):
        expected = [3.0 / math.sqrt(10.0), 0.0, 1.0 / math.sqrt(10.0), 0.0]
        assert_close(boosted_spinor(z_boost, SpinLabel.UP), expected, 1e-15)

    def test_rest_limit(self):
        for spin in SpinLabel:
            assert_close(
                boosted_spinor(BoostParams(), spin),
                rest_spinor(ParticleKind.PARTICLE, spin),
                0.0,
            )

    @pytest.mark.parametrize("speed", SPEEDS)
    def test_orthonormal(self, speed, random_unit):
        for _ in range(20):
            boost = BoostParams(speed=speed, direction=tuple(random_unit()))
            up = boosted_spinor(boost, SpinLabel.UP)
            down = boosted_spinor(boost, SpinLabel.DOWN)
            assert abs(np.vdot(up, up) - 1.0) < 1e-12
            assert abs(np.vdot(down, down) - 1.0) < 1e-12
            assert abs(np.vdot(up, down)) < 1e-12

    @pytest.mark.parametrize("speed", SPEEDS)
    def test_dirac_equation(self, speed, random_unit):
        for _ in range(20):
            boost = BoostParams(speed=speed, direction=tuple(random_unit()))
            p_slash = slash(four_momentum(boost))
            for spin in SpinLabel:
                u = boosted_spinor(boost, spin)
                residual = np.linalg.norm(p_slash @ u - boost.mass * u)
                assert residual / boost.energy < 1e-10

    @pytest.mark.parametrize("speed", [0.0, 0.3, 0.6, 0.9])
    def test_continuous_in_speed(self, speed, random_unit):
        direction = tuple(random_unit())
        here = BoostParams(speed=speed, direction=direction)
        there = BoostParams(speed=speed + 1e-8, direction=direction)
        for spin in SpinLabel:
            step = np.linalg.norm(boosted_spinor(there, spin) - boosted_spinor(here, spin))
            assert step < 1e-6

    def test_orthonormal_at_speed_cap(self, random_unit):
        for _ in range(20):
            boost = BoostParams(speed=BETA_MAX, direction=tuple(random_unit()))
            up = boosted_spinor(boost, SpinLabel.UP)
            down = boosted_spinor(boost, SpinLabel.DOWN)
            assert abs(np.vdot(up, up) - 1.0) < 1e-12
            assert abs(np.vdot(up, down)) < 1e-12

    def test_basis_is_cached_and_read_only(self, z_boost):
        first = positive_energy_projector_basis(z_boost)
        second = positive_energy_projector_basis(BoostParams(speed=0.6))
        assert first[0] is second[0]
        with pytest.raises(ValueError):
            first[0][0] = 0.0
