"""Rest-frame and boosted four-component Dirac spinors."""
import logging
import math
from enum import Enum
from functools import lru_cache
from typing import Tuple

import numpy as np

from diracbell.physics.dirac import PAULI
from diracbell.physics.minkowski import BoostParams

logger = logging.getLogger(__name__)

Spinor = np.ndarray


class SpinLabel(Enum):
    """Spin projection along the lab z axis."""

    UP = 0.5
    DOWN = -0.5

    @property
    def sign(self) -> int:
        return 1 if self is SpinLabel.UP else -1


class ParticleKind(Enum):
    PARTICLE = "particle"
    ANTIPARTICLE = "antiparticle"


def two_component(spin: SpinLabel) -> np.ndarray:
    """Pauli spinor φ^(±) with σ₃φ^(±) = ±φ^(±)."""
    return np.array([1, 0], dtype=complex) if spin is SpinLabel.UP else np.array(
        [0, 1], dtype=complex
    )


def rest_spinor(kind: ParticleKind, spin: SpinLabel) -> Spinor:
    """
    Standard basis spinors u(0, ±½) and v(0, ±½).

    u(0, ½) = e₀, u(0, −½) = e₁, v(0, ½) = e₂, v(0, −½) = e₃; all are Σ³
    eigenvectors with eigenvalue equal to twice the spin label.
    """
    offset = 0 if kind is ParticleKind.PARTICLE else 2
    index = offset + (0 if spin is SpinLabel.UP else 1)
    spinor = np.zeros(4, dtype=complex)
    spinor[index] = 1.0
    return spinor


def boosted_spinor(boost: BoostParams, spin: SpinLabel) -> Spinor:
    """
    Normalized positive-energy spinor u(p, ±½).

    u = √((E+m)/2E) · (φ, (σ·p)φ/(E+m)); u†u = 1 and p̸u = m·u.
    The spin axis of φ stays the lab ẑ for every boost direction.

    :param boost: boost parameters
    :param spin: spin label of the rest-frame spinor
    :return: 4-component complex spinor
    """
    energy = boost.energy
    mass = boost.mass
    p = boost.momentum
    phi = two_component(spin)
    sigma_p = p[0] * PAULI[0] + p[1] * PAULI[1] + p[2] * PAULI[2]
    lower = (sigma_p @ phi) / (energy + mass)
    prefactor = math.sqrt((energy + mass) / (2.0 * energy))
    return prefactor * np.concatenate((phi, lower))


@lru_cache(maxsize=256)
def _basis(boost: BoostParams) -> Tuple[Spinor, Spinor]:
    up = boosted_spinor(boost, SpinLabel.UP)
    down = boosted_spinor(boost, SpinLabel.DOWN)
    up.setflags(write=False)
    down.setflags(write=False)
    return up, down


def positive_energy_projector_basis(boost: BoostParams) -> Tuple[Spinor, Spinor]:
    """Ordered orthonormal basis (u(p, +½), u(p, −½)) of the positive-energy subspace."""
    return _basis(boost)
