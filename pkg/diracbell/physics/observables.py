"""
Relativistic spin observables.

Two families are compared:

- the invariant observable built from the Pauli-Lubanski vector,
  ŝ = (2/m)W·s = (1/m)γ⁵s̸p̸, which acts as γ⁵s̸ on positive-energy spinors;
- the normalized center-of-mass spin projection of Czachor,
  â = (√(1−β²)a⊥ + a∥)·σ / √(1 − |a×u|²), acting on two-component spin.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from diracbell.core.constants import UNIT_NORM_TOLERANCE
from diracbell.core.utils import is_unit
from diracbell.physics.dirac import (
    PAULI,
    contract,
    gamma5,
    pauli_lubanski,
    sigma_spin,
    slash,
    slash_many,
)
from diracbell.physics.minkowski import (
    BoostParams,
    BoostRangeError,
    FourVector,
    ThreeVector,
    four_momentum,
    polarization_vector,
    polarization_vectors,
)
from diracbell.physics.spinors import (
    SpinLabel,
    positive_energy_projector_basis,
    two_component,
)

logger = logging.getLogger(__name__)

class ClosedFormDomainError(ValueError):
    """Raised when a p ∥ ẑ closed form is requested for another boost direction."""


@dataclass(frozen=True)
class SpinObservable:
    """
    Spin projection along ``direction`` for a particle with the given boost.

    ``matrix`` is (1/m)γ⁵s̸p̸ (equal to Σ·n at rest); ``gamma5_slash`` is γ⁵s̸.
    Both agree on the positive-energy subspace, where the restriction is
    Hermitian; neither is Hermitian on the full four-dimensional space.
    """

    direction: np.ndarray
    boost: BoostParams
    polarization: FourVector
    matrix: np.ndarray
    gamma5_slash: np.ndarray


@dataclass(frozen=True)
class CzachorObservable:
    direction: np.ndarray
    velocity: ThreeVector
    matrix: np.ndarray


def sigma_dot(v) -> np.ndarray:
    """σ·v for a real or complex three-vector."""
    return v[0] * PAULI[0] + v[1] * PAULI[1] + v[2] * PAULI[2]


def spin_observable(n: ThreeVector, boost: BoostParams) -> SpinObservable:
    """
    Invariant spin observable along ``n`` for a particle boosted by ``boost``.

    :param n: unit measurement direction (rest frame)
    :param boost: boost parameters
    :return: SpinObservable with s = polarization_vector(n, boost)
    :raises ValueError: If ``n`` is not a unit vector
    """
    n = np.asarray(n, dtype=float)
    s = polarization_vector(n, boost)
    g5s = gamma5() @ slash(s)
    matrix = g5s @ slash(four_momentum(boost)) / boost.mass
    return SpinObservable(
        direction=n, boost=boost, polarization=s, matrix=matrix, gamma5_slash=g5s
    )


def spin_observable_matrices(directions, boost: BoostParams) -> np.ndarray:
    """
    Stack of (1/m)γ⁵s̸p̸ for several unit directions sharing one boost.

    :param directions: (k, 3) array of unit vectors
    :return: (k, 4, 4) complex array, row i equal to spin_observable(directions[i]).matrix
    """
    s = polarization_vectors(directions, boost)
    p_slash = slash(four_momentum(boost)) / boost.mass
    return gamma5() @ slash_many(s) @ p_slash


def gamma5_slash_matrices(directions, boost: BoostParams) -> np.ndarray:
    """
    Stack of γ⁵s̸ for several unit directions sharing one boost.

    Entries grow like γ rather than γ², so these are the matrices the
    correlators are evaluated with.

    :param directions: (k, 3) array of unit vectors
    :return: (k, 4, 4) complex array, row i equal to spin_observable(directions[i]).gamma5_slash
    """
    return gamma5() @ slash_many(polarization_vectors(directions, boost))


def pauli_lubanski_observable(n: ThreeVector, boost: BoostParams) -> np.ndarray:
    """(2/m) W_μ s^μ built directly from the Pauli-Lubanski matrices."""
    s = polarization_vector(n, boost)
    w = pauli_lubanski(four_momentum(boost))
    return (2.0 / boost.mass) * contract(w, s)


def rest_spin_operator(n: ThreeVector) -> np.ndarray:
    """
    Σ·n, block-diagonal σ·n.

    :raises ValueError: If ``n`` is not a unit vector
    """
    n = np.asarray(n, dtype=float)
    if not is_unit(n):
        raise ValueError(f"measurement direction must be a unit vector, got {n}")
    return n[0] * sigma_spin(1) + n[1] * sigma_spin(2) + n[2] * sigma_spin(3)


def _two_component_form(s_spatial, boost: BoostParams) -> np.ndarray:
    """((E+m)/2E)[σ·s − (σ·p)(σ·s)(σ·p)/(E+m)²] on the φ^(±) basis."""
    energy = boost.energy
    mass = boost.mass
    sigma_p = sigma_dot(boost.momentum)
    sigma_s = sigma_dot(s_spatial)
    sandwich = sigma_p @ sigma_s @ sigma_p
    return (energy + mass) / (2.0 * energy) * (
        sigma_s - sandwich / (energy + mass) ** 2
    )


def expectation_closed_form(
    n: ThreeVector, boost: BoostParams, spin: SpinLabel
) -> float:
    """
    ⟨u(p, spin)| γ⁵s̸ |u(p, spin)⟩ from the two-component reduction.

    The time component of s drops out of every positive-energy matrix
    element, leaving only σ·s and the (σ·p)(σ·s)(σ·p) sandwich.
    """
    s = polarization_vector(n, boost)
    phi = two_component(spin)
    form = _two_component_form(s[1:], boost)
    return float(np.real(np.conj(phi) @ form @ phi))


def _is_z_boost(boost: BoostParams) -> bool:
    if boost.speed == 0.0:
        return True
    d = boost.direction
    return abs(abs(d[2]) - 1.0) <= UNIT_NORM_TOLERANCE


def matrix_element_closed_form(
    row: SpinLabel, col: SpinLabel, n: ThreeVector, boost: BoostParams
) -> complex:
    """
    u†(p, row) γ⁵s̸ u(p, col) for p ∥ ẑ.

    (+,+) → γ⁻¹s_z, (−,−) → −γ⁻¹s_z, (+,−) → s_x − is_y, (−,+) → s_x + is_y.

    :raises ClosedFormDomainError: If the boost is not along ±ẑ
    """
    if not _is_z_boost(boost):
        raise ClosedFormDomainError(
            f"closed-form matrix elements need p ∥ z, got direction {boost.direction}"
        )
    s = polarization_vector(n, boost)
    s_x, s_y, s_z = s[1], s[2], s[3]
    if row is col:
        return complex(row.sign * s_z / boost.gamma)
    if row is SpinLabel.UP:
        return complex(s_x, -s_y)
    return complex(s_x, s_y)


def effective_two_by_two(n: ThreeVector, boost: BoostParams) -> np.ndarray:
    """
    Restriction of γ⁵s̸ to span{u(p, +½), u(p, −½)}.

    M[r][c] = u(p, r)† γ⁵s̸ u(p, c); equals σ·n for every boost.
    """
    g5s = spin_observable(n, boost).gamma5_slash
    basis = positive_energy_projector_basis(boost)
    stacked = np.stack(basis, axis=1)
    return stacked.conj().T @ g5s @ stacked


def sigma_sandwich_identity(p: ThreeVector, s: ThreeVector):
    """
    Both sides of (σ·p)(σ·s)(σ·p) = |p|²(s_zσ_z − s_yσ_y − s_xσ_x).

    The right-hand side holds only for p ∥ ẑ.

    :return: (lhs, rhs) 2×2 matrices
    """
    p = np.asarray(p, dtype=float)
    s = np.asarray(s, dtype=float)
    lhs = sigma_dot(p) @ sigma_dot(s) @ sigma_dot(p)
    rhs = float(p @ p) * (s[2] * PAULI[2] - s[1] * PAULI[1] - s[0] * PAULI[0])
    return lhs, rhs


def _check_velocity(u) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if not np.all(np.isfinite(u)) or float(u @ u) >= 1.0:
        raise BoostRangeError(f"boost velocity must satisfy |u| < 1, got {u}")
    return u


def _split(a: np.ndarray, u: np.ndarray):
    """Components of ``a`` parallel and perpendicular to ``u``."""
    u2 = float(u @ u)
    if u2 == 0.0:
        return np.zeros(3), a
    parallel = (float(a @ u) / u2) * u
    return parallel, a - parallel


def czachor_observable(a: ThreeVector, u: ThreeVector) -> CzachorObservable:
    """
    Normalized relativistic spin projection along ``a`` for boost velocity ``u``.

    :param a: unit direction
    :param u: boost velocity, |u| < 1
    :raises BoostRangeError: If |u| >= 1
    :raises ValueError: If ``a`` is not a unit vector
    """
    a = np.asarray(a, dtype=float)
    if not is_unit(a):
        raise ValueError(f"measurement direction must be a unit vector, got {a}")
    u = _check_velocity(u)
    parallel, perpendicular = _split(a, u)
    effective = math.sqrt(1.0 - float(u @ u)) * perpendicular + parallel
    cross = np.cross(a, u)
    norm = math.sqrt(1.0 - float(cross @ cross))
    return CzachorObservable(
        direction=a, velocity=u, matrix=sigma_dot(effective) / norm
    )


def czachor_correlator(a: ThreeVector, b: ThreeVector, u: ThreeVector) -> float:
    """
    Closed-form singlet average of the Czachor observables:

    −(a·b − u²a⊥·b⊥) / (√(1−|a×u|²) √(1−|b×u|²)).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    u = _check_velocity(u)
    u2 = float(u @ u)
    _, a_perp = _split(a, u)
    _, b_perp = _split(b, u)
    a_u = float(a @ u)
    b_u = float(b @ u)
    # |a×u|² = |a|²|u|² − (a·u)²
    a_cross2 = float(a @ a) * u2 - a_u * a_u
    b_cross2 = float(b @ b) * u2 - b_u * b_u
    numerator = float(a @ b) - u2 * float(a_perp @ b_perp)
    denominator = math.sqrt(1.0 - a_cross2) * math.sqrt(1.0 - b_cross2)
    return -numerator / denominator


def qubit_singlet() -> np.ndarray:
    """(|+−⟩ − |−+⟩)/√2 in the two-qubit basis."""
    state = np.zeros(4, dtype=complex)
    state[1] = 1.0 / math.sqrt(2.0)
    state[2] = -1.0 / math.sqrt(2.0)
    return state


def czachor_correlator_direct(
    a: ThreeVector, b: ThreeVector, u: ThreeVector
) -> float:
    """⟨singlet| â ⊗ b̂ |singlet⟩ evaluated as a two-qubit quadratic form."""
    singlet = qubit_singlet()
    joint = np.kron(czachor_observable(a, u).matrix, czachor_observable(b, u).matrix)
    return float(np.real(np.conj(singlet) @ joint @ singlet))
