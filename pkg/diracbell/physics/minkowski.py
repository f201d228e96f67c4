"""
Four-vector kinematics under the (+,-,-,-) metric.

Provides the boost parameterization shared by every other module, the
standard pure boost, and the boosted polarization four-vector
s = (p·n/m, n + (p·n)p/(m(E+m))).
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from diracbell.core.constants import BETA_MAX, DEFAULT_MASS
from diracbell.core.utils import is_unit, normalize

logger = logging.getLogger(__name__)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

# Contravariant real 4-array (x0, x1, x2, x3)
FourVector = np.ndarray
ThreeVector = np.ndarray


class BoostRangeError(ValueError):
    """Raised when a boost speed lies outside [0, BETA_MAX]."""


@dataclass(frozen=True)
class BoostParams:
    """
    Standard boost from the rest frame of a particle of mass ``mass``.

    ``direction`` is normalized on construction; it is irrelevant when
    ``speed`` is zero but must still be a non-zero vector.
    """

    speed: float = 0.0
    direction: Tuple[float, float, float] = (0.0, 0.0, 1.0)
    mass: float = DEFAULT_MASS
    _momentum: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not math.isfinite(self.speed) or self.speed < 0.0 or self.speed > BETA_MAX:
            raise BoostRangeError(
                f"boost speed must lie in [0, {BETA_MAX}], got {self.speed}"
            )
        if not math.isfinite(self.mass) or self.mass <= 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        unit = normalize(self.direction)
        object.__setattr__(self, "direction", tuple(float(c) for c in unit))
        object.__setattr__(self, "_momentum", self.momentum_magnitude * unit)

    @property
    def gamma(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.speed * self.speed)

    @property
    def energy(self) -> float:
        return self.gamma * self.mass

    @property
    def momentum_magnitude(self) -> float:
        return self.gamma * self.mass * self.speed

    @property
    def momentum(self) -> ThreeVector:
        return self._momentum.copy()

    @property
    def velocity(self) -> ThreeVector:
        """Boost velocity β·direction (the u of the center-of-mass spin operator)."""
        return self.speed * np.asarray(self.direction)

    @property
    def rapidity(self) -> float:
        return math.atanh(self.speed)


def minkowski_dot(x: FourVector, y: FourVector) -> float:
    """x⁰y⁰ − x¹y¹ − x²y² − x³y³."""
    return float(x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3])


def lower_index(v: FourVector) -> FourVector:
    """Covariant components v_μ = g_μν v^ν."""
    return METRIC @ np.asarray(v, dtype=float)


def four_momentum(boost: BoostParams) -> FourVector:
    """(γm, γmβ·direction); satisfies p·p = m²."""
    return np.concatenate(([boost.energy], boost.momentum))


def boost_matrix(boost: BoostParams) -> np.ndarray:
    """
    Matrix of the pure boost taking (m, 0, 0, 0) to the four-momentum of ``boost``.

    :param boost: boost parameters
    :return: 4×4 real matrix Λ with Λ^T g Λ = g
    """
    g = boost.gamma
    d = np.asarray(boost.direction)
    lam = np.eye(4)
    lam[0, 0] = g
    lam[0, 1:] = g * boost.speed * d
    lam[1:, 0] = g * boost.speed * d
    lam[1:, 1:] += (g - 1.0) * np.outer(d, d)
    return lam


def boost_four_vector(v: FourVector, boost: BoostParams) -> FourVector:
    """Standard-boost image of ``v``; preserves v·v."""
    return boost_matrix(boost) @ np.asarray(v, dtype=float)


def polarization_vector(n: ThreeVector, boost: BoostParams) -> FourVector:
    """
    Polarization four-vector of a particle whose rest-frame spin axis is ``n``.

    s^μ = (p·n/m, n + (p·n)p/(m(E+m))), with s·s = −1 and s·p = 0.

    :param n: unit measurement direction
    :param boost: boost parameters (already range checked)
    :return: contravariant s^μ
    :raises ValueError: If ``n`` is not a unit vector
    """
    n = np.asarray(n, dtype=float)
    if not is_unit(n):
        raise ValueError(f"measurement direction must be a unit vector, got {n}")
    return polarization_vectors(n[np.newaxis, :], boost)[0]


def polarization_vectors(directions: np.ndarray, boost: BoostParams) -> np.ndarray:
    """Row-wise polarization_vector for a (k, 3) stack of unit directions."""
    directions = np.asarray(directions, dtype=float)
    p = boost.momentum
    m = boost.mass
    p_dot_n = directions @ p
    s = np.empty((directions.shape[0], 4))
    s[:, 0] = p_dot_n / m
    s[:, 1:] = directions + np.outer(p_dot_n, p) / (m * (boost.energy + m))
    return s
