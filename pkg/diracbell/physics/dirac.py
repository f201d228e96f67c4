"""
Gamma-matrix algebra in the Dirac representation.

γ⁰ = diag(1, 1, −1, −1), γⁱ = [[0, σⁱ], [−σⁱ, 0]], γ⁵ = [[0, 1], [1, 0]].
All matrices are dense complex numpy arrays; the Levi-Civita symbol uses
ε^{0123} = +1, which makes (2/m)W·s = (1/m)γ⁵s̸p̸ hold as a matrix identity.
"""
import itertools
import logging
import math

import numpy as np

from diracbell.physics.minkowski import BoostParams, FourVector, METRIC, lower_index

logger = logging.getLogger(__name__)


class IndexRangeError(ValueError):
    """Raised when a Lorentz index falls outside 0..3."""


IDENTITY_2 = np.eye(2, dtype=complex)
PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_ZERO_2 = np.zeros((2, 2), dtype=complex)

_GAMMA_STACK = np.stack(
    [
        np.block([[IDENTITY_2, _ZERO_2], [_ZERO_2, -IDENTITY_2]]),
        *(np.block([[_ZERO_2, s], [-s, _ZERO_2]]) for s in PAULI),
    ]
)
_GAMMA5 = np.block([[_ZERO_2, IDENTITY_2], [IDENTITY_2, _ZERO_2]])


def _permutation_sign(perm):
    inversions = sum(
        1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _build_levi_civita():
    eps = np.zeros((4, 4, 4, 4))
    for perm in itertools.permutations(range(4)):
        eps[perm] = _permutation_sign(perm)
    return eps


_EPSILON = _build_levi_civita()


def _check_index(mu):
    if mu not in (0, 1, 2, 3):
        raise IndexRangeError(f"Lorentz index must be in 0..3, got {mu!r}")


def identity(dim=4):
    """Complex identity of size ``dim``."""
    return np.eye(dim, dtype=complex)


def levi_civita(mu, nu, rho, sigma):
    """ε^{μνρσ} with ε^{0123} = +1."""
    for index in (mu, nu, rho, sigma):
        _check_index(index)
    return float(_EPSILON[mu, nu, rho, sigma])


def gamma(mu):
    """
    Contravariant γ^μ in the Dirac representation.

    :param mu: Lorentz index 0..3
    :return: 4×4 complex matrix (a fresh copy)
    :raises IndexRangeError: If ``mu`` is out of range
    """
    _check_index(mu)
    return _GAMMA_STACK[mu].copy()


def gamma5():
    """γ⁵ = iγ⁰γ¹γ²γ³, off-diagonal identity blocks."""
    return _GAMMA5.copy()


def gamma_lower(mu):
    """Covariant γ_μ = g_μμ γ^μ."""
    _check_index(mu)
    return METRIC[mu, mu] * _GAMMA_STACK[mu]


def slash(v: FourVector):
    """Feynman slash v_μγ^μ = v⁰γ⁰ − v·γ."""
    return np.tensordot(lower_index(v), _GAMMA_STACK, axes=1)


def slash_many(vectors):
    """Slashes of a stack of four-vectors, shape (k, 4) -> (k, 4, 4)."""
    return np.tensordot(np.asarray(vectors, dtype=float) @ METRIC, _GAMMA_STACK, axes=1)


def sigma_mu_nu(mu, nu):
    """σ_{μν} = (i/2)[γ_μ, γ_ν] with lowered indices."""
    g_mu = gamma_lower(mu)
    g_nu = gamma_lower(nu)
    return 0.5j * (g_mu @ g_nu - g_nu @ g_mu)


def alpha(i):
    """αⁱ = γ⁰γⁱ for spatial i in 1..3."""
    if i not in (1, 2, 3):
        raise IndexRangeError(f"spatial index must be in 1..3, got {i!r}")
    return _GAMMA_STACK[0] @ _GAMMA_STACK[i]


def sigma_spin(i):
    """Σⁱ: block-diagonal σⁱ for spatial i in 1..3."""
    if i not in (1, 2, 3):
        raise IndexRangeError(f"spatial index must be in 1..3, got {i!r}")
    return np.kron(IDENTITY_2, PAULI[i - 1])


def pauli_lubanski(p: FourVector):
    """
    Pauli-Lubanski matrices on a plane wave of momentum ``p``.

    W^μ = (i/4) ε^{μνρσ} σ_{νρ} ∂_σ with ∂_σ → −i p_σ, i.e.
    W^μ(p) = (1/4) ε^{μνρσ} σ_{νρ} p_σ.

    :param p: contravariant four-momentum
    :return: array of shape (4, 4, 4); entry ``[mu]`` is the 4×4 matrix W^μ
    """
    sigma = np.array([[sigma_mu_nu(a, b) for b in range(4)] for a in range(4)])
    return 0.25 * np.einsum("abcd,bcij,d->aij", _EPSILON, sigma, lower_index(p))


def contract(w, v: FourVector):
    """W_μ v^μ for a stack of four matrices ``w``."""
    return np.tensordot(lower_index(v), w, axes=1)


def tensor_product(a, b):
    """Kronecker product; row-major layout (i, j) ↦ dim_b·i + j, particle 1 slow."""
    return np.kron(a, b)


def spinor_boost_matrix(boost: BoostParams):
    """
    Spinor representation S(Λ) = cosh(η/2) + sinh(η/2) α·d of the standard boost.

    S maps u(0) to γ^{1/2} u(p) for the u†u = 1 normalized spinors.
    """
    half = 0.5 * boost.rapidity
    d = boost.direction
    alpha_d = sum(d[i] * alpha(i + 1) for i in range(3))
    return math.cosh(half) * identity() + math.sinh(half) * alpha_d
