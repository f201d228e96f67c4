"""
Numerical CHSH maximization.

Multistart over a scrambled Sobol sequence followed by Nelder-Mead
refinement of the most promising seeds and a final polishing restart.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.optimize import minimize
from scipy.stats import qmc

from diracbell.analysis.bell import (
    MeasurementSettings,
    OperatorKind,
    PlaneRestriction,
    canonical_settings,
    chsh_value,
    plane_basis,
)
from diracbell.core.config import get_optimizer_config
from diracbell.core.constants import (
    OPTIMIZER_MAX_ITER_DEFAULT,
    OPTIMIZER_MULTISTART_DEFAULT,
    OPTIMIZER_MULTISTART_MIN,
    OPTIMIZER_REFINE_DEFAULT,
    OPTIMIZER_SEED_DEFAULT,
    OPTIMIZER_TOL_DEFAULT,
    OPTIMIZER_XATOL,
    SWEEP_WORKERS_DEFAULT,
)
from diracbell.physics.minkowski import BoostParams

logger = logging.getLogger(__name__)

_SIMPLEX_STEP = 0.2


class OptimizerConfig(BaseModel):
    """Multistart and Nelder-Mead settings; ``tol`` applies to the CHSH value."""

    model_config = ConfigDict(frozen=True)

    seed: int = OPTIMIZER_SEED_DEFAULT
    tol: float = Field(default=OPTIMIZER_TOL_DEFAULT, gt=0.0)
    multistart: int = Field(
        default=OPTIMIZER_MULTISTART_DEFAULT, ge=OPTIMIZER_MULTISTART_MIN
    )
    refine: int = Field(default=OPTIMIZER_REFINE_DEFAULT, ge=1)
    max_iter: int = Field(default=OPTIMIZER_MAX_ITER_DEFAULT, ge=1)
    workers: int = Field(default=SWEEP_WORKERS_DEFAULT, ge=1)

    @model_validator(mode="after")
    def _refine_within_multistart(self):
        if self.refine > self.multistart:
            raise ValueError(
                f"refine ({self.refine}) cannot exceed multistart ({self.multistart})"
            )
        return self


def default_optimizer_config(**overrides) -> OptimizerConfig:
    """
    Optimizer configuration from DIRACBELL_* environment variables.

    :param overrides: explicit values (e.g. from CLI flags); None entries are ignored
    :return: validated OptimizerConfig
    """
    values = get_optimizer_config()
    values.update({k: v for k, v in overrides.items() if v is not None})
    return OptimizerConfig(**values)


@dataclass(frozen=True)
class ChshResult:
    value: float
    settings: MeasurementSettings
    operator_kind: OperatorKind
    boost: BoostParams
    restriction: PlaneRestriction
    iterations: int
    converged: bool


def _spherical(theta: float, phi: float) -> np.ndarray:
    sin_theta = math.sin(theta)
    return np.array(
        [sin_theta * math.cos(phi), sin_theta * math.sin(phi), math.cos(theta)]
    )


class _SettingsSpace:
    """Maps optimizer coordinates to measurement settings."""

    def __init__(self, boost: BoostParams, restriction: PlaneRestriction):
        self.restriction = restriction
        if restriction is PlaneRestriction.BOOST_PLANE:
            self.dim = 1
            self.scale = np.array([2.0 * math.pi])
            self.e1, self.e2 = plane_basis(boost.direction)
        else:
            self.dim = 8
            self.scale = np.tile([math.pi, 2.0 * math.pi], 4)

    def settings(self, x: np.ndarray) -> MeasurementSettings:
        if self.restriction is PlaneRestriction.BOOST_PLANE:
            return canonical_settings(self.e1, self.e2, math.degrees(float(x[0])))
        vectors = [_spherical(x[2 * i], x[2 * i + 1]) for i in range(4)]
        return MeasurementSettings(*vectors)


def _nelder_mead(objective, x0: np.ndarray, config: OptimizerConfig):
    simplex = np.vstack([x0, x0 + _SIMPLEX_STEP * np.eye(len(x0))])
    return minimize(
        objective,
        x0,
        method="Nelder-Mead",
        options={
            "maxiter": config.max_iter,
            "xatol": OPTIMIZER_XATOL,
            "fatol": config.tol,
            "adaptive": True,
            "initial_simplex": simplex,
        },
    )


def chsh_maximize(
    boost: BoostParams,
    kind: OperatorKind,
    config: Optional[OptimizerConfig] = None,
    restriction: PlaneRestriction = PlaneRestriction.NONE,
) -> ChshResult:
    """
    Maximize the CHSH value over measurement settings.

    Unrestricted searches use the eight spherical angles of (a, a′, b, b′);
    ``BOOST_PLANE`` rotates the canonical CHSH geometry within the plane
    containing the boost. Deterministic for a fixed ``config.seed``.

    :param boost: shared boost of both particles
    :param kind: observable family
    :param config: optimizer configuration (environment defaults when None)
    :param restriction: search space
    :return: ChshResult; ``converged`` is False when the polishing restart
        still moved the value by ``config.tol`` or more
    """
    config = config or default_optimizer_config()
    space = _SettingsSpace(boost, restriction)

    def objective(x):
        return -chsh_value(space.settings(x), boost, kind)

    sampler = qmc.Sobol(d=space.dim, scramble=True, seed=config.seed)
    seeds = sampler.random(config.multistart) * space.scale
    seed_values = np.array([objective(x) for x in seeds])
    order = np.argsort(seed_values, kind="stable")

    best_x = seeds[order[0]]
    best_f = float(seed_values[order[0]])
    iterations = 0
    for index in order[: config.refine]:
        result = _nelder_mead(objective, seeds[index], config)
        iterations += int(result.nit)
        logger.debug(
            "Seed %d refined to %.15f in %d iterations", index, -result.fun, result.nit
        )
        if result.fun < best_f:
            best_f = float(result.fun)
            best_x = result.x

    polish = _nelder_mead(objective, best_x, config)
    iterations += int(polish.nit)
    converged = bool(polish.success) and abs(float(polish.fun) - best_f) < config.tol
    if polish.fun < best_f:
        best_f = float(polish.fun)
        best_x = polish.x

    if not converged:
        logger.warning(
            "CHSH maximization did not converge (kind=%s, beta=%s, restriction=%s)",
            kind.value,
            boost.speed,
            restriction.value,
        )
    logger.info(
        "CHSH max %.12f (kind=%s, beta=%s, restriction=%s, iterations=%d)",
        -best_f,
        kind.value,
        boost.speed,
        restriction.value,
        iterations,
    )
    return ChshResult(
        value=-best_f,
        settings=space.settings(best_x),
        operator_kind=kind,
        boost=boost,
        restriction=restriction,
        iterations=iterations,
        converged=converged,
    )


def _sweep_point(args) -> ChshResult:
    beta, direction, mass, kind, restriction, config = args
    boost = BoostParams(speed=beta, direction=direction, mass=mass)
    return chsh_maximize(boost, kind, config, restriction)


def chsh_boost_sweep(
    kind: OperatorKind,
    beta_grid: Sequence[float],
    restriction: PlaneRestriction = PlaneRestriction.NONE,
    config: Optional[OptimizerConfig] = None,
    direction=(0.0, 0.0, 1.0),
    mass: float = 1.0,
) -> List[ChshResult]:
    """
    One CHSH maximization per β, returned in grid order.

    With ``config.workers`` > 1 the points run in worker processes; results
    are still merged in input order, so output is identical either way.

    :raises BoostRangeError: If a β lies outside [0, BETA_MAX]
    """
    config = config or default_optimizer_config()
    # Fail fast on the whole grid before any optimization starts.
    for beta in beta_grid:
        BoostParams(speed=beta, direction=direction, mass=mass)

    jobs = [(beta, tuple(direction), mass, kind, restriction, config) for beta in beta_grid]
    logger.info(
        "Sweeping %d boost speeds (kind=%s, restriction=%s, workers=%d)",
        len(jobs),
        kind.value,
        restriction.value,
        config.workers,
    )
    if config.workers == 1 or len(jobs) < 2:
        return [_sweep_point(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=config.workers) as executor:
        return list(executor.map(_sweep_point, jobs))
