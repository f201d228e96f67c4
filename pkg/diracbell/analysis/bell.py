"""
Two-particle Bell states built from boosted Dirac spinors, joint spin
correlators and the CHSH combination

    |E(a,b) + E(a′,b) + E(a,b′) − E(a′,b′)|.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple

import numpy as np

from diracbell.core.constants import CANONICAL_ANGLES_DEG
from diracbell.core.utils import is_unit, normalize, planar_vector
from diracbell.physics.dirac import tensor_product
from diracbell.physics.minkowski import BoostParams
from diracbell.physics.observables import (
    czachor_correlator,
    gamma5_slash_matrices,
    spin_observable,
)
from diracbell.physics.spinors import positive_energy_projector_basis

logger = logging.getLogger(__name__)

TwoParticleState = np.ndarray

IMAGINARY_TOLERANCE = 1e-10


class OperatorKind(Enum):
    PAULI_LUBANSKI = "pauli-lubanski"
    CZACHOR = "czachor"


class PlaneRestriction(Enum):
    NONE = "none"
    BOOST_PLANE = "boost-plane"


class CorrelatorError(RuntimeError):
    """Raised when a joint expectation value has a non-vanishing imaginary part."""


@dataclass(frozen=True)
class MeasurementSettings:
    """Directions a, a′ for particle 1 and b, b′ for particle 2."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        for name in ("a", "a_prime", "b", "b_prime"):
            vector = np.asarray(getattr(self, name), dtype=float)
            if not is_unit(vector):
                raise ValueError(f"setting {name} must be a unit vector, got {vector}")
            object.__setattr__(self, name, vector)

    @classmethod
    def from_vectors(cls, a, a_prime, b, b_prime) -> "MeasurementSettings":
        """Build settings from arbitrary non-zero vectors, normalizing each."""
        return cls(normalize(a), normalize(a_prime), normalize(b), normalize(b_prime))

    def as_tuple(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.a, self.a_prime, self.b, self.b_prime

    def flat(self) -> list:
        """The 12 components in a, a′, b, b′ order."""
        return [float(c) for v in self.as_tuple() for c in v]


@lru_cache(maxsize=256)
def _bell_state(boost: BoostParams) -> TwoParticleState:
    up, down = positive_energy_projector_basis(boost)
    state = (tensor_product(up, down) - tensor_product(down, up)) / math.sqrt(2.0)
    state.setflags(write=False)
    return state


def bell_state(boost: BoostParams) -> TwoParticleState:
    """
    (u(p,½)⊗u(p,−½) − u(p,−½)⊗u(p,½))/√2 for both particles sharing momentum p.

    At β = 0 this is the rest-frame singlet with +1/√2 at index 1 and −1/√2 at index 4.
    """
    return _bell_state(boost)


def swap_particles(state: TwoParticleState) -> TwoParticleState:
    """Exchange the particle labels of a 16-component state."""
    return np.asarray(state).reshape(4, 4).T.reshape(16)


def _quadratic_forms(
    state: TwoParticleState, firsts: np.ndarray, seconds: np.ndarray
) -> np.ndarray:
    """
    ⟨Ψ| A_k ⊗ B_k |Ψ⟩ for stacks of 4×4 operators, as 16-dimensional forms.

    With Ψ laid out as the 4×4 matrix ψ[i, j] (index 4i + j), the form is
    Σ ψ*_ij (A ψ Bᵀ)_ij. The imaginary-part check is relative to the
    operator scale max|A|·max|B|, which grows with the boost.
    """
    psi = np.asarray(state).reshape(4, 4)
    images = firsts @ psi @ np.swapaxes(seconds, 1, 2)
    values = np.einsum("ij,xij->x", psi.conj(), images)
    scale = np.maximum(
        1.0, np.abs(firsts).max(axis=(1, 2)) * np.abs(seconds).max(axis=(1, 2))
    )
    worst = int(np.argmax(np.abs(values.imag) / scale))
    if abs(values.imag[worst]) > IMAGINARY_TOLERANCE * scale[worst]:
        raise CorrelatorError(
            f"joint expectation has imaginary part {values.imag[worst]:.3e}"
            f" (operator scale {scale[worst]:.3e})"
        )
    return values.real


def correlator(a, b, boost: BoostParams) -> float:
    """
    ⟨Ψ| ŝ(a) ⊗ ŝ(b) |Ψ⟩ as a direct 16-dimensional quadratic form.

    Equals −a·b for every boost. The form is evaluated with γ⁵s̸, which
    agrees with (2/m)W·s on the positive-energy spinors making up Ψ.

    :raises CorrelatorError: If the imaginary part exceeds 1e-10 relative
        to the operator scale
    """
    first = spin_observable(a, boost).gamma5_slash
    second = spin_observable(b, boost).gamma5_slash
    return float(_quadratic_forms(bell_state(boost), first[None], second[None])[0])


def correlation_table(
    settings: MeasurementSettings, boost: BoostParams, kind: OperatorKind
) -> Tuple[float, float, float, float]:
    """
    The four correlators E(a,b), E(a′,b), E(a,b′), E(a′,b′).

    :param settings: measurement settings
    :param boost: shared boost of both particles
    :param kind: observable family
    :return: tuple of four reals
    """
    if kind is OperatorKind.CZACHOR:
        a, a_prime, b, b_prime = settings.as_tuple()
        pairs = ((a, b), (a_prime, b), (a, b_prime), (a_prime, b_prime))
        u = boost.velocity
        return tuple(czachor_correlator(x, y, u) for x, y in pairs)

    m_a, m_ap, m_b, m_bp = gamma5_slash_matrices(np.stack(settings.as_tuple()), boost)
    firsts = np.stack((m_a, m_ap, m_a, m_ap))
    seconds = np.stack((m_b, m_b, m_bp, m_bp))
    return tuple(float(v) for v in _quadratic_forms(bell_state(boost), firsts, seconds))


def chsh_from_table(table) -> float:
    e_ab, e_apb, e_abp, e_apbp = table
    return abs(e_ab + e_apb + e_abp - e_apbp)


def chsh_value(
    settings: MeasurementSettings, boost: BoostParams, kind: OperatorKind
) -> float:
    """|E(a,b) + E(a′,b) + E(a,b′) − E(a′,b′)|."""
    return chsh_from_table(correlation_table(settings, boost, kind))


def plane_basis(direction) -> Tuple[np.ndarray, np.ndarray]:
    """
    Orthonormal pair (e1, e2) spanning a fixed plane that contains ``direction``.

    e1 is the direction itself; e2 is x̂ (or ŷ when the direction is close
    to x̂) with its e1 component removed.
    """
    e1 = normalize(direction)
    reference = np.array([1.0, 0.0, 0.0])
    if abs(float(e1 @ reference)) > 0.9:
        reference = np.array([0.0, 1.0, 0.0])
    e2 = normalize(reference - float(reference @ e1) * e1)
    return e1, e2


def canonical_settings(e1, e2, offset_deg: float = 0.0) -> MeasurementSettings:
    """
    Rest-frame optimal CHSH geometry in the plane (e1, e2), rotated by ``offset_deg``.

    Planar angles a = 0°, a′ = 90°, b = 45°, b′ = −45°.
    """
    vectors = [planar_vector(offset_deg + angle, e1, e2) for angle in CANONICAL_ANGLES_DEG]
    return MeasurementSettings.from_vectors(*vectors)


def czachor_chsh_rigid_closed_form(beta: float) -> float:
    """
    Czachor CHSH value of the canonical geometry with a along the boost.

    2(1 + √(1−β²)) / √(2 − β²); this is also the best orientation of that
    geometry within the boost plane.
    """
    return 2.0 * (1.0 + math.sqrt(1.0 - beta * beta)) / math.sqrt(2.0 - beta * beta)
