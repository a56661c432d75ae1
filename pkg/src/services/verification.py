import logging
import math
from concurrent.futures import Executor
from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np

from src import exceptions
from src.config import Tolerances
from src.models import schemas
from src.models.geometry import Isometry, ModelForm
from src.models.qmatrix import QMatrix
from src.models.state import CertifyOutcome, Suite
from src.services.numeric import bounds, geometry, linalg, volume

_log = logging.getLogger(__name__)

SPREAD = 1.0
NEAR_IDENTITY_SCALE = 0.02
CAYLEY_TOL = 1e-13
QUADRATURE_TOL = 1e-8
DERIVATIVE_TOL = 1e-9
DIRICHLET_Q = (3, 5, 9)
DILATION_RADII = (1.01, math.e, 10.0)
VOLUME_GRID = [(n, R) for n in (1, 2, 3) for R in (0.1, 0.5, 1.0, 2.0, 5.0)]


@dataclass(frozen=True)
class Outcome:
    name: str
    slack: float | None
    tol: float = 0.0


def _isometry_near_identity(n: int, rng: np.random.Generator, scale: float, tol: Tolerances) -> Isometry:
    k1 = geometry.random_stabilizer(n, rng, scale, tolerances=tol)
    k2 = geometry.random_stabilizer(n, rng, scale, tolerances=tol)
    r = math.exp(rng.uniform(0.0, scale))
    return k1 @ geometry.dilation(n, r, tol.FORM) @ k2


def _isometry_with_displacement(n: int, rng: np.random.Generator, delta: float, tol: Tolerances) -> Isometry:
    k1 = geometry.random_stabilizer(n, rng, tolerances=tol)
    k2 = geometry.random_stabilizer(n, rng, tolerances=tol)
    return k1 @ geometry.dilation(n, math.exp(delta / 2.0), tol.FORM) @ k2


def commutator_sample(rng: np.random.Generator, index: int, n: int, Q: int, tol: Tolerances) -> list[Outcome]:
    A = geometry.random_isometry(n, rng, SPREAD, tolerances=tol)
    B = geometry.random_isometry(n, rng, SPREAD, tolerances=tol)
    U = geometry.random_unitary(n + 1, rng, pivot_tol=tol.PIVOT)
    K = geometry.random_stabilizer(n, rng, tolerances=tol)
    norm = linalg.spectral_norm(A.matrix)
    return [
        Outcome(
            "commutator_inequality",
            bounds.commutator_bound(A.matrix, B.matrix, max_cond=tol.SINGULAR_COND)
            - bounds.commutator_defect(A.matrix, B.matrix, max_cond=tol.SINGULAR_COND),
            tol.INEQUALITY,
        ),
        Outcome("inverse_norm", -abs(linalg.spectral_norm(A.inverse().matrix) - norm), tol.NORM),
        Outcome("unitary_invariance", -abs(linalg.spectral_norm(U @ A.matrix @ U.adjoint()) - norm), tol.NORM),
        Outcome("stabilizer_norm", -abs(linalg.spectral_norm(K.matrix) - 1.0), tol.NORM),
    ]


def zassenhaus_sample(rng: np.random.Generator, index: int, n: int, Q: int, tol: Tolerances) -> list[Outcome]:
    tau = bounds.solve_tau()
    A = _isometry_near_identity(n, rng, NEAR_IDENTITY_SCALE, tol)
    B = _isometry_near_identity(n, rng, NEAR_IDENTITY_SCALE, tol)
    I = QMatrix.identity(n + 1)
    inside = all(
        linalg.spectral_norm(X.matrix - I) < tau and linalg.spectral_norm(X.matrix) <= 1.0 + tau
        for X in (A, B)
    )
    if not inside:
        return []
    defect = bounds.commutator_defect(A.matrix, B.matrix, max_cond=tol.SINGULAR_COND)
    return [Outcome("zassenhaus_closure", tau - defect)]


def dirichlet_sample(rng: np.random.Generator, index: int, n: int, Q: int, tol: Tolerances) -> list[Outcome]:
    Qd = DIRICHLET_Q[index % len(DIRICHLET_Q)]
    m = 2 + (index // len(DIRICHLET_Q)) % 3
    thetas = rng.uniform(0.0, 1.0, m)
    try:
        result = bounds.dirichlet_approximate(thetas, Qd)
    except exceptions.PropertyViolation as exc:
        _log.warning("dirichlet[%d]: %s", index, exc.message)
        return [Outcome("dirichlet_search", None)]

    # независимый перебор всех q' < q
    qs = np.arange(1, result.q, dtype=np.float64)[:, None]
    earlier = bool((np.abs(qs * thetas - np.rint(qs * thetas)) < 1.0 / Qd).all(axis=1).any())
    error = max(abs(t - p / result.q) for t, p in zip(thetas, result.p))
    return [
        Outcome("dirichlet_search", 0.0),
        Outcome("dirichlet_range", float(Qd ** m - result.q)),
        Outcome("dirichlet_error", 1.0 / (result.q * Qd) - error, 1e-15),
        Outcome("dirichlet_minimality", -1.0 if earlier else 0.0),
    ]


def rotation_sample(rng: np.random.Generator, index: int, n: int, Q: int, tol: Tolerances) -> list[Outcome]:
    R = geometry.random_stabilizer(n, rng, tolerances=tol)
    try:
        certificate = bounds.approximate_rotation(R, Q, tolerances=tol)
    except exceptions.PropertyViolation as exc:
        _log.warning("rotation[%d]: %s", index, exc.message)
        return [Outcome("rotation_bound", None)]
    return [
        Outcome("rotation_bound", certificate.bound - certificate.achieved, tol.NORM),
        Outcome("rotation_search_range", float(certificate.search_limit - certificate.q)),
        Outcome("rotation_angle_consistency", -abs(certificate.achieved - certificate.angle_estimate), tol.NORM),
    ]


def resume_sample(rng: np.random.Generator, index: int, n: int, Q: int, tol: Tolerances) -> list[Outcome]:
    # четные выборки: δ < λ'_n, где гарантировано product < ω; нечетные: δ < λ_n
    below_corrected = index % 2 == 0
    limit = bounds.lambda_parity_corrected(n, Q) if below_corrected else bounds.lambda_n(n, Q)
    A = _isometry_with_displacement(n, rng, rng.uniform(0.1, 1.0) * limit, tol)
    try:
        report = bounds.certify_displacement(A, Q, tolerances=tol)
    except exceptions.PropertyViolation as exc:
        _log.warning("resume[%d]: %s", index, exc.message)
        return [Outcome("resume_chain", None)]
    if report.outcome == CertifyOutcome.FIXES_ORIGIN:
        return []
    outcomes = [
        Outcome("norm_A_le_r", report.slack_norm_A, tol.NORM),
        Outcome("power_gap", report.slack_power_gap, tol.INEQUALITY),
        Outcome("resume_bound", report.slack_resume, tol.INEQUALITY),
    ]
    if below_corrected:
        outcomes.append(Outcome("product_below_omega", report.slack_omega))
    return outcomes


def distance_sample(rng: np.random.Generator, index: int, n: int, Q: int, tol: Tolerances) -> list[Outcome]:
    g = geometry.random_isometry(n, rng, SPREAD, tolerances=tol)
    X, Y, Z = (geometry.random_interior_point(n, rng, SPREAD, tolerances=tol) for _ in range(3))
    rho = partial(geometry.distance, tol=tol.NULL_CONE, arccosh_tol=tol.ARCCOSH)
    d_xy = rho(X, Y)
    r = DILATION_RADII[index % len(DILATION_RADII)]
    o = geometry.origin(n)

    C = geometry.cayley_matrix(n)
    U = geometry.random_quaternion_matrix(n + 1, 1, rng)
    W = geometry.random_quaternion_matrix(n + 1, 1, rng)
    transport = geometry.pairing(U, W, ModelForm.ball(n)) - geometry.pairing(C @ U, C @ W, ModelForm.half_space(n))
    return [
        Outcome("distance_invariance", -abs(rho(g.apply(X), g.apply(Y)) - d_xy), tol.NORM),
        Outcome("distance_triangle", d_xy + rho(Y, Z) - rho(X, Z), tol.INEQUALITY),
        Outcome(
            "distance_dilation",
            -abs(rho(o, geometry.dilation(n, r, tol.FORM).apply(o)) - 2.0 * math.log(r)),
            tol.NORM,
        ),
        Outcome("cayley_transport", -transport.modulus(), CAYLEY_TOL),
    ]


def volume_sample(rng: np.random.Generator, index: int, n: int, Q: int, tol: Tolerances) -> list[Outcome]:
    dim, R = VOLUME_GRID[index % len(VOLUME_GRID)]
    closed = volume.ball_volume(dim, R).volume
    density = volume.volume_density(dim, R)
    outcomes = [
        Outcome("volume_quadrature", -abs(volume.integrate_density(dim, R) - closed) / closed, QUADRATURE_TOL),
        Outcome("volume_derivative", -abs(volume.radial_derivative(dim, R) - density) / density, DERIVATIVE_TOL),
    ]
    exact = math.pi ** (2 * dim) / math.factorial(2 * dim)
    outcomes.append(Outcome("sigma_factorial", -abs(volume.sigma(dim) - exact) / exact, 1e-12))
    return outcomes


SAMPLERS: dict[Suite, Callable[..., list[Outcome]]] = {
    Suite.COMMUTATOR: commutator_sample,
    Suite.ZASSENHAUS: zassenhaus_sample,
    Suite.DIRICHLET: dirichlet_sample,
    Suite.ROTATION: rotation_sample,
    Suite.RESUME: resume_sample,
    Suite.DISTANCE: distance_sample,
    Suite.VOLUME: volume_sample,
}


def run_sample(suite: Suite, seed: int, n: int, Q: int, tol: Tolerances, index: int) -> list[Outcome]:
    rng = np.random.default_rng([seed, suite.code, index])
    try:
        return SAMPLERS[suite](rng, index, n, Q, tol)
    except exceptions.ToolkitError as exc:
        _log.warning("%s[%d]: %s", suite.value, index, exc.message)
        return [Outcome(f"{suite.value}_error", None)]


class VerificationApplicationService:

    def __init__(self, config, executor: Executor):
        self._config = config
        self._executor = executor
        self._log = logging.getLogger(__name__)

    def run(self, suite: Suite, samples: int, seed: int, n: int, Q: int) -> list[schemas.SuiteReport]:
        """
        Прогнать проверку свойств с детерминированными зернами

        :param suite: набор проверок (или all)
        :param samples: число выборок на набор
        :param seed: зерно
        :param n: кватернионная размерность
        :param Q: параметр приближения
        :return: по отчету на каждый набор
        """
        suites = [item for item in Suite if item != Suite.ALL] if suite == Suite.ALL else [suite]
        return [self._run_suite(item, samples, seed, n, Q) for item in suites]

    def _run_suite(self, suite: Suite, samples: int, seed: int, n: int, Q: int) -> schemas.SuiteReport:
        self._log.info("Набор %s: %d выборок, seed = %d", suite.value, samples, seed)
        task = partial(run_sample, suite, seed, n, Q, self._config.TOLERANCE)
        checks: dict[str, schemas.InequalityCheck] = {}
        # map сохраняет порядок индексов
        for outcomes in self._executor.map(task, range(samples)):
            for outcome in outcomes:
                check = checks.setdefault(outcome.name, schemas.InequalityCheck(suite=suite, name=outcome.name))
                if outcome.slack is None:
                    check.fail()
                else:
                    check.record(outcome.slack, outcome.tol)

        violations = sum(check.violations for check in checks.values())
        if violations:
            self._log.warning("Набор %s: нарушений %d", suite.value, violations)
        return schemas.SuiteReport(
            suite=suite,
            n=n,
            Q=Q,
            samples=samples,
            seed=seed,
            violations=violations,
            checks=list(checks.values()),
        )
