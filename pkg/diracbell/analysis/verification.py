"""
Invariant suite behind ``diracbell verify``.

Each check evaluates one invariant group on deterministic random inputs
and reports the worst residual next to its tolerance.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from diracbell.analysis.bell import (
    MeasurementSettings,
    OperatorKind,
    bell_state,
    canonical_settings,
    chsh_value,
    correlator,
    swap_particles,
)
from diracbell.analysis.optimizer import OptimizerConfig, chsh_maximize
from diracbell.core.constants import BETA_MAX, TSIRELSON_BOUND
from diracbell.physics import dirac
from diracbell.physics.minkowski import (
    METRIC,
    BoostParams,
    boost_four_vector,
    four_momentum,
    minkowski_dot,
    polarization_vector,
)
from diracbell.physics.observables import (
    czachor_correlator,
    czachor_correlator_direct,
    czachor_observable,
    effective_two_by_two,
    expectation_closed_form,
    matrix_element_closed_form,
    sigma_dot,
    sigma_sandwich_identity,
    spin_observable,
)
from diracbell.physics.spinors import SpinLabel, boosted_spinor

logger = logging.getLogger(__name__)

VERIFY_SEED = 1234
SPINOR_BETAS = (0.0, 0.3, 0.6, 0.9, 0.99, 0.999)
INVARIANCE_BETAS = (0.0, 0.1, 0.3, 0.5, 0.6, 0.8, 0.9, 0.99, 0.995, 0.999)
CONTINUITY_BETAS = (0.0, 0.3, 0.6, 0.9)
CONTINUITY_STEP = 1e-8
FLOOR_BETAS = (0.0, 0.9)
_Z = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return bool(math.isfinite(self.residual) and self.residual <= self.tolerance)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "residual": self.residual if math.isfinite(self.residual) else None,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


def random_unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_boost(rng: np.random.Generator, speeds=None) -> BoostParams:
    speed = float(rng.choice(speeds)) if speeds is not None else float(rng.uniform(0.0, 0.999))
    return BoostParams(
        speed=speed,
        direction=tuple(random_unit(rng)),
        mass=float(rng.uniform(0.5, 2.0)),
    )


def _norm(matrix) -> float:
    return float(np.max(np.abs(matrix))) if np.size(matrix) else 0.0


def check_gamma_anticommutators(rng) -> float:
    worst = 0.0
    for mu in range(4):
        for nu in range(mu, 4):
            g_mu, g_nu = dirac.gamma(mu), dirac.gamma(nu)
            expected = 2.0 * METRIC[mu, nu] * dirac.identity()
            worst = max(worst, _norm(g_mu @ g_nu + g_nu @ g_mu - expected))
    return worst


def check_gamma5(rng) -> float:
    g5 = dirac.gamma5()
    product = 1j * dirac.gamma(0) @ dirac.gamma(1) @ dirac.gamma(2) @ dirac.gamma(3)
    worst = _norm(g5 - product)
    for mu in range(4):
        g = dirac.gamma(mu)
        worst = max(worst, _norm(g5 @ g + g @ g5))
    return worst


def check_gamma_hermiticity(rng) -> float:
    worst = _norm(dirac.gamma(0).conj().T - dirac.gamma(0))
    for i in (1, 2, 3):
        worst = max(worst, _norm(dirac.gamma(i).conj().T + dirac.gamma(i)))
    return worst


def check_spinor_normalization(rng) -> float:
    worst = 0.0
    for speed in SPINOR_BETAS:
        for _ in range(20):
            boost = BoostParams(speed=speed, direction=tuple(random_unit(rng)))
            up = boosted_spinor(boost, SpinLabel.UP)
            down = boosted_spinor(boost, SpinLabel.DOWN)
            worst = max(
                worst,
                abs(np.vdot(up, up) - 1.0),
                abs(np.vdot(down, down) - 1.0),
                abs(np.vdot(up, down)),
            )
    return worst


def check_dirac_equation(rng) -> float:
    worst = 0.0
    for speed in SPINOR_BETAS:
        for _ in range(20):
            boost = BoostParams(speed=speed, direction=tuple(random_unit(rng)))
            p_slash = dirac.slash(four_momentum(boost))
            for spin in SpinLabel:
                u = boosted_spinor(boost, spin)
                residual = np.linalg.norm(p_slash @ u - boost.mass * u)
                worst = max(worst, float(residual) / boost.energy)
    return worst


def check_polarization(rng) -> float:
    worst = 0.0
    for _ in range(200):
        boost = random_boost(rng, speeds=(0.0, 0.5, 0.9, 0.999))
        n = random_unit(rng)
        s = polarization_vector(n, boost)
        p = four_momentum(boost)
        worst = max(worst, abs(minkowski_dot(s, s) + 1.0), abs(minkowski_dot(s, p)))
    return worst


def check_polarization_boost(rng) -> float:
    worst = 0.0
    for _ in range(200):
        boost = random_boost(rng, speeds=(0.0, 0.5, 0.9, 0.999))
        n = random_unit(rng)
        boosted = boost_four_vector(np.concatenate(([0.0], n)), boost)
        worst = max(worst, _norm(boosted - polarization_vector(n, boost)))
    return worst


def check_pauli_lubanski(rng) -> float:
    worst = 0.0
    for _ in range(100):
        boost = random_boost(rng)
        n = random_unit(rng)
        s = polarization_vector(n, boost)
        w = dirac.pauli_lubanski(four_momentum(boost))
        w_dot_s = (2.0 / boost.mass) * dirac.contract(w, s)
        g5s = dirac.gamma5() @ dirac.slash(s)
        for spin in SpinLabel:
            u = boosted_spinor(boost, spin)
            worst = max(worst, _norm(w_dot_s @ u - g5s @ u))
    return worst


def check_expectation_closed_form(rng) -> float:
    worst = 0.0
    for _ in range(100):
        boost = random_boost(rng)
        n = random_unit(rng)
        g5s = spin_observable(n, boost).gamma5_slash
        for spin in SpinLabel:
            u = boosted_spinor(boost, spin)
            direct = np.vdot(u, g5s @ u).real
            worst = max(worst, abs(expectation_closed_form(n, boost, spin) - direct))
    return worst


def check_matrix_elements(rng) -> float:
    worst = 0.0
    for _ in range(50):
        boost = BoostParams(
            speed=float(rng.uniform(0.0, 0.999)),
            direction=(0.0, 0.0, 1.0),
            mass=float(rng.uniform(0.5, 2.0)),
        )
        n = random_unit(rng)
        g5s = spin_observable(n, boost).gamma5_slash
        for row in SpinLabel:
            for col in SpinLabel:
                direct = np.vdot(boosted_spinor(boost, row), g5s @ boosted_spinor(boost, col))
                closed = matrix_element_closed_form(row, col, n, boost)
                worst = max(worst, abs(closed - direct))
    return worst


def check_sigma_sandwich(rng) -> float:
    worst = 0.0
    for _ in range(50):
        p = float(rng.uniform(-3.0, 3.0)) * _Z
        s = rng.normal(size=3)
        lhs, rhs = sigma_sandwich_identity(p, s)
        worst = max(worst, _norm(lhs - rhs))
    return worst


def check_effective_operator(rng) -> float:
    worst = 0.0
    for _ in range(200):
        boost = random_boost(rng, speeds=(0.0, 0.3, 0.6, 0.9, 0.99, 0.999))
        n = random_unit(rng)
        worst = max(worst, _norm(effective_two_by_two(n, boost) - sigma_dot(n)))
    return worst


def check_boost_invariance(rng) -> float:
    worst = 0.0
    for _ in range(100):
        a, b = random_unit(rng), random_unit(rng)
        direction = tuple(random_unit(rng))
        for speed in INVARIANCE_BETAS:
            boost = BoostParams(speed=speed, direction=direction)
            worst = max(worst, abs(correlator(a, b, boost) + float(a @ b)))
    return worst


def check_czachor_closed_form(rng) -> float:
    worst = 0.0
    for _ in range(100):
        a, b = random_unit(rng), random_unit(rng)
        u = float(rng.uniform(0.0, 0.99)) * random_unit(rng)
        worst = max(
            worst, abs(czachor_correlator(a, b, u) - czachor_correlator_direct(a, b, u))
        )
    return worst


def check_tsirelson(rng) -> float:
    worst = -math.inf
    for _ in range(10_000):
        settings = MeasurementSettings(*(random_unit(rng) for _ in range(4)))
        boost = random_boost(rng)
        worst = max(worst, chsh_value(settings, boost, OperatorKind.PAULI_LUBANSKI))
    return max(0.0, worst - TSIRELSON_BOUND)


def check_rest_frame_violation(rng) -> float:
    settings = canonical_settings(np.array([1.0, 0.0, 0.0]), _Z)
    rest = BoostParams()
    return max(abs(chsh_value(settings, rest, kind) - TSIRELSON_BOUND) for kind in OperatorKind)


def check_minkowski_dot(rng) -> float:
    worst = 0.0
    for _ in range(100):
        x, y, z = rng.normal(size=(3, 4))
        alpha = float(rng.normal())
        worst = max(
            worst,
            abs(minkowski_dot(x, y) - minkowski_dot(y, x)),
            abs(
                minkowski_dot(alpha * x + y, z)
                - (alpha * minkowski_dot(x, z) + minkowski_dot(y, z))
            ),
        )
    return worst


def check_slash_anticommutator(rng) -> float:
    worst = 0.0
    for _ in range(100):
        v, w = rng.normal(size=(2, 4))
        v_slash, w_slash = dirac.slash(v), dirac.slash(w)
        expected = 2.0 * minkowski_dot(v, w) * dirac.identity()
        residual = _norm(v_slash @ w_slash + w_slash @ v_slash - expected)
        worst = max(worst, residual / max(1.0, float(np.linalg.norm(v) * np.linalg.norm(w))))
    return worst


def check_pauli_lubanski_transverse(rng) -> float:
    worst = 0.0
    for _ in range(100):
        boost = random_boost(rng)
        p = four_momentum(boost)
        w = dirac.pauli_lubanski(p)
        worst = max(worst, _norm(dirac.contract(w, p)) / max(1.0, float(np.linalg.norm(p))))
    return worst


def check_spinor_continuity(rng) -> float:
    worst = 0.0
    for speed in CONTINUITY_BETAS:
        direction = tuple(random_unit(rng))
        here = BoostParams(speed=speed, direction=direction)
        there = BoostParams(speed=speed + CONTINUITY_STEP, direction=direction)
        for spin in SpinLabel:
            step = np.linalg.norm(boosted_spinor(there, spin) - boosted_spinor(here, spin))
            worst = max(worst, float(step))
    return worst


def check_bell_antisymmetry(rng) -> float:
    worst = 0.0
    for speed in INVARIANCE_BETAS + (BETA_MAX,):
        boost = BoostParams(speed=speed, direction=tuple(random_unit(rng)))
        state = bell_state(boost)
        worst = max(worst, _norm(swap_particles(state) + state))
    return worst


def check_beta_max_correlator(rng) -> float:
    worst = 0.0
    for _ in range(200):
        a, b = random_unit(rng), random_unit(rng)
        boost = BoostParams(
            speed=BETA_MAX,
            direction=tuple(random_unit(rng)),
            mass=float(rng.uniform(0.5, 2.0)),
        )
        worst = max(worst, abs(correlator(a, b, boost) + float(a @ b)))
    return worst


def check_czachor_spectrum(rng) -> float:
    worst = 0.0
    for _ in range(100):
        a = random_unit(rng)
        u = float(rng.uniform(0.0, 0.99)) * random_unit(rng)
        eigenvalues = np.linalg.eigvalsh(czachor_observable(a, u).matrix)
        worst = max(worst, float(np.max(np.abs(np.abs(eigenvalues) - 1.0))))
    return worst


def check_optimizer_floor(rng) -> float:
    config = OptimizerConfig(seed=VERIFY_SEED, refine=2)
    worst = 0.0
    for speed in FLOOR_BETAS:
        boost = BoostParams(speed=speed, direction=tuple(random_unit(rng)))
        result = chsh_maximize(boost, OperatorKind.PAULI_LUBANSKI, config)
        worst = max(worst, TSIRELSON_BOUND - result.value)
    return worst


CHECKS: List[tuple] = [
    ("gamma_anticommutators", check_gamma_anticommutators, 1e-14),
    ("gamma5_algebra", check_gamma5, 1e-14),
    ("gamma_hermiticity", check_gamma_hermiticity, 1e-14),
    ("minkowski_dot_bilinear", check_minkowski_dot, 1e-12),
    ("slash_anticommutator", check_slash_anticommutator, 1e-13),
    ("pauli_lubanski_transverse", check_pauli_lubanski_transverse, 1e-12),
    ("spinor_orthonormality", check_spinor_normalization, 1e-12),
    ("dirac_equation", check_dirac_equation, 1e-10),
    ("spinor_continuity", check_spinor_continuity, 1e-6),
    ("polarization_normalization", check_polarization, 1e-9),
    ("polarization_boost", check_polarization_boost, 1e-10),
    ("pauli_lubanski_consistency", check_pauli_lubanski, 1e-10),
    ("expectation_closed_form", check_expectation_closed_form, 1e-12),
    ("matrix_element_closed_form", check_matrix_elements, 1e-12),
    ("sigma_sandwich_identity", check_sigma_sandwich, 1e-12),
    ("effective_two_by_two", check_effective_operator, 1e-10),
    ("bell_state_antisymmetry", check_bell_antisymmetry, 1e-15),
    ("boost_invariance", check_boost_invariance, 1e-9),
    ("beta_max_correlator", check_beta_max_correlator, 1e-10),
    ("czachor_closed_form", check_czachor_closed_form, 1e-12),
    ("czachor_spectrum", check_czachor_spectrum, 1e-12),
    ("tsirelson_bound", check_tsirelson, 1e-9),
    ("rest_frame_violation", check_rest_frame_violation, 1e-12),
    ("chsh_optimizer_floor", check_optimizer_floor, 1e-6),
]


def run_checks(seed: int = VERIFY_SEED, checks=None) -> List[CheckResult]:
    """
    Run every invariant group.

    A check that raises is reported as failed with the error as detail.

    :param seed: seed of the shared random generator
    :param checks: (name, function, tolerance) triples; all groups when None
    :return: one CheckResult per group, in suite order
    """
    rng = np.random.default_rng(seed)
    results = []
    for name, func, tolerance in checks or CHECKS:
        check: Callable = func
        try:
            residual = float(check(rng))
            detail = None
        except (ValueError, ArithmeticError, RuntimeError) as e:
            logger.error("Check %s raised: %s", name, e)
            residual = math.inf
            detail = f"{type(e).__name__}: {e}"
        result = CheckResult(name=name, residual=residual, tolerance=tolerance, detail=detail)
        logger.info(
            "%s %s residual=%.3e tol=%.0e",
            "PASS" if result.passed else "FAIL",
            name,
            residual,
            tolerance,
        )
        results.append(result)
    return results
