import logging
import math
from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from src import exceptions
from src.config import TOLERANCE, Tolerances
from src.models.geometry import Isometry
from src.models.qmatrix import QMatrix
from src.models.schemas import (
    ApproximationCertificate,
    BoundConstants,
    BoundReport,
    DirichletResult,
    MarginReading,
    TheoremMargin,
)
from src.models.state import CertifyOutcome, IsometryClass
from src.services.numeric.geometry import (
    cayley_transport,
    classify_isometry,
    dilation_decompose,
    fixes_origin,
    normalize_to_vertical,
    project_to_group,
)
from src.services.numeric.linalg import is_unitary, spectral_norm, unitary_angles

_log = logging.getLogger(__name__)

DEFAULT_Q = 9
LAMBDA_SCALE = 0.05
CHUNK = 4096


def log_lambda_n(n: int, Q: int = DEFAULT_Q) -> float:
    return math.log(LAMBDA_SCALE) - (n + 1) * math.log(Q)


def lambda_n(n: int, Q: int = DEFAULT_Q) -> float:
    """λ_n = 0.05/Q^{n+1}; при больших n значение уходит в 0, логарифм остается точным"""
    return math.exp(log_lambda_n(n, Q))


def log_lambda_parity_corrected(n: int, Q: int = DEFAULT_Q) -> float:
    return log_lambda_n(n, 2 * Q)


def lambda_parity_corrected(n: int, Q: int = DEFAULT_Q) -> float:
    """Радиус смещения, при котором r^q ≤ e^{0.025} для q ≤ (2Q)^{n+1}"""
    return math.exp(log_lambda_parity_corrected(n, Q))


def solve_tau() -> float:
    return brentq(lambda t: 2.0 * t * (1.0 + t) ** 2 - 1.0, 0.0, 1.0, xtol=1e-16, rtol=4 * np.finfo(float).eps)


def solve_constants(n: int, Q: int = DEFAULT_Q) -> BoundConstants:
    """
    Константы τ, ω и λ_n

    τ корень 2τ(1+τ)² = 1, ω = sqrt(τ/2) корень 2ω(2ω²+1) = 1.

    :param n: кватернионная размерность (n ≥ 2)
    :param Q: параметр приближения Дирихле
    :return:
    """
    if n < 2:
        raise exceptions.BadRequest("Требуется n ≥ 2")
    tau = solve_tau()
    return BoundConstants(
        n=n,
        tau=tau,
        omega=math.sqrt(tau / 2.0),
        omega_printed_relation=0.5 * math.sqrt(tau),
        lambda_n=lambda_n(n, Q),
        lambda_parity_corrected=lambda_parity_corrected(n, Q),
    )


def omega() -> float:
    return math.sqrt(solve_tau() / 2.0)


# неравенства для коммутаторов

def commutator(A: QMatrix, B: QMatrix, *, max_cond: float = TOLERANCE.SINGULAR_COND) -> QMatrix:
    """[A, B] = A·B·A⁻¹·B⁻¹"""
    if A.shape != B.shape or not A.is_square:
        raise exceptions.ShapeMismatch("Ожидаются квадратные матрицы одного размера")
    return A @ B @ A.inverse(max_cond) @ B.inverse(max_cond)


def commutator_defect(A: QMatrix, B: QMatrix, *, max_cond: float = TOLERANCE.SINGULAR_COND) -> float:
    return spectral_norm(commutator(A, B, max_cond=max_cond) - QMatrix.identity(A.rows))


def commutator_bound(A: QMatrix, B: QMatrix, *, max_cond: float = TOLERANCE.SINGULAR_COND) -> float:
    """2‖A−I‖‖B−I‖‖A⁻¹‖‖B⁻¹‖"""
    I = QMatrix.identity(A.rows)
    return (
            2.0 *
            spectral_norm(A - I) *
            spectral_norm(B - I) *
            spectral_norm(A.inverse(max_cond)) *
            spectral_norm(B.inverse(max_cond))
    )


def zassenhaus_alternative(
        A: QMatrix,
        B: QMatrix,
        *,
        max_cond: float = TOLERANCE.SINGULAR_COND,
) -> tuple[float, float]:
    """
    (max(‖A−I‖, ‖B−I‖), max(‖A−I‖, ‖[A,B]−I‖))
    """
    I = QMatrix.identity(A.rows)
    a = spectral_norm(A - I)
    return max(a, spectral_norm(B - I)), max(a, commutator_defect(A, B, max_cond=max_cond))


def displacement_product(A: QMatrix) -> float:
    """‖A‖·‖A−I‖"""
    return spectral_norm(A) * spectral_norm(A - QMatrix.identity(A.rows))


def jorgensen_martin_test(A: Isometry, B: Isometry) -> float:
    """
    max(‖A‖‖A−I‖, ‖B‖‖B−I‖); значение сравнивается с ω вызывающей стороной
    """
    if A.form != B.form:
        raise exceptions.ShapeMismatch("Изометрии заданы в разных моделях")
    return max(displacement_product(A.matrix), displacement_product(B.matrix))


# приближения Дирихле

def nearest_integers(values: np.ndarray) -> np.ndarray:
    return np.rint(values)


def dirichlet_approximate(thetas: Sequence[float], Q: int, *, chunk: int = CHUNK) -> DirichletResult:
    """
    Наименьшее q ∈ [1, Q^m] с max|θᵢ − pᵢ/q| < 1/(qQ), где pᵢ = round(q·θᵢ)

    :param thetas: m чисел из [0, 1]
    :param Q: параметр (Q ≥ 2)
    :return:
    """
    thetas = np.asarray(thetas, dtype=np.float64)
    m = thetas.size
    if m < 1 or thetas.ndim != 1:
        raise exceptions.BadRequest("Требуется хотя бы одно число θ")
    if Q < 2:
        raise exceptions.BadRequest("Требуется Q ≥ 2")
    if ((thetas < 0) | (thetas > 1)).any():
        raise exceptions.BadRequest("Числа θ должны лежать в [0, 1]")
    limit = Q ** m
    if limit > 2 ** 53:
        raise exceptions.BadRequest(f"Диапазон поиска Q^m = {Q}^{m} слишком велик")

    for start in range(1, limit + 1, chunk):
        qs = np.arange(start, min(start + chunk, limit + 1), dtype=np.float64)
        scaled = qs[:, None] * thetas[None, :]
        p = nearest_integers(scaled)
        found = (np.abs(scaled - p) < 1.0 / Q).all(axis=1)
        if found.any():
            k = int(np.argmax(found))
            q = int(qs[k])
            numerators = [int(v) for v in p[k]]
            errors = [abs(float(t) - v / q) for t, v in zip(thetas, numerators)]
            return DirichletResult(q=q, p=numerators, errors=errors, Q=Q)

    _log.error("Поиск q исчерпан: θ = %s, Q = %d", thetas.tolist(), Q)
    raise exceptions.DirichletSearchExhausted(
        f"Нет q ≤ {limit} для θ = {thetas.tolist()} и Q = {Q}"
    )


def approximate_rotation(
        R: Isometry,
        Q: int = DEFAULT_Q,
        *,
        tolerances: Tolerances = TOLERANCE,
) -> ApproximationCertificate:
    """
    Степень q, при которой ‖R^q − I‖ ≤ π/Q, для эллиптического R, оставляющего o на месте

    Углы θᵢ = angleᵢ/π берутся из спектра R в модели шара. Приближение
    строится по половинам углов с параметром 2Q: тогда |qθᵢ − 2pᵢ| < 1/Q,
    все собственные значения R^q отстоят от 1 меньше чем на π/Q, и q ≤ (2Q)^{n+1}.
    Норма ‖R^q − I‖ измеряется по явной степени матрицы.
    """
    if not fixes_origin(R, tolerances.FIXES_ORIGIN):
        raise exceptions.DomainRejection("Изометрия не оставляет o на месте")
    ball = cayley_transport(R)
    if not is_unitary(ball.matrix, tolerances.UNITARY):
        raise exceptions.DomainRejection("Изометрия не эллиптическая")

    angles = unitary_angles(ball.matrix, tolerances.UNITARY, pairing_tol=tolerances.PAIRING)
    thetas = [min(max(angle / math.pi, 0.0), 1.0) for angle in angles]
    approximation = dirichlet_approximate([t / 2.0 for t in thetas], 2 * Q)
    q = approximation.q

    size = R.form.size
    achieved = spectral_norm(R.matrix.power(q) - QMatrix.identity(size))
    angle_estimate = max(2.0 * abs(math.sin(math.pi * t * q / 2.0)) for t in thetas)
    bound = math.pi / Q
    if achieved > bound + tolerances.NORM:
        raise exceptions.ApproximationFailure(
            f"‖R^q − I‖ = {achieved:.6g} > π/Q = {bound:.6g} при q = {q}"
        )
    return ApproximationCertificate(
        n=R.n,
        Q=Q,
        q=q,
        bound=bound,
        achieved=achieved,
        angle_estimate=angle_estimate,
        thetas=thetas,
        numerators=[2 * p for p in approximation.p],
        search_limit=(2 * Q) ** (R.n + 1),
        within_stated_range=q <= Q ** (R.n + 1),
    )


# цепочка оценок

def resume_bound(r: float, q: int, Q: int) -> float:
    """r^q·(r·(r^q − 1) + π/Q)"""
    if r < 1 or q < 1 or Q < 2:
        raise exceptions.BadRequest("Требуется r ≥ 1, q ≥ 1, Q ≥ 2")
    log_r = math.log(r)
    return math.exp(q * log_r) * (r * math.expm1(q * log_r) + math.pi / Q)


def _reading(name: str, log_lambda: float, q_max: int, Q: int, omega_value: float) -> MarginReading:
    """
    Оценка при r < e^{λ/2} и q ≤ q_max

    Показатель q_max·ln r собирается из логарифмов: q_max и 1/λ
    выходят за пределы double при n в несколько сотен.
    """
    log_r_max = math.exp(log_lambda - math.log(2.0))
    growth = math.exp(math.log(q_max) + log_lambda - math.log(2.0))
    bound = math.exp(growth) * (math.exp(log_r_max) * math.expm1(growth) + math.pi / Q)
    return MarginReading(
        name=name,
        lambda_used=math.exp(log_lambda),
        q_max=q_max,
        r_max=math.exp(log_r_max),
        bound=bound,
        verdict=bound < omega_value,
    )


def main_theorem_margin(n: int, omega_value: float | None = None, Q: int = DEFAULT_Q) -> TheoremMargin:
    """
    Итоговая оценка e^{0.025}·(e^{0.025/Q^n}·(e^{0.025} − 1) + π/Q) против ω

    Помимо записанной формулы считаются еще два прочтения:
    conservative (r < e^{λ_n/2}, q ≤ Q^{n+1}) и parity-corrected
    (q ≤ (2Q)^{n+1}, радиус λ'_n = 0.05/(2Q)^{n+1}).
    """
    if n < 2:
        raise exceptions.BadRequest("Требуется n ≥ 2")
    if Q < 2:
        raise exceptions.BadRequest("Требуется Q ≥ 2")
    omega_value = omega() if omega_value is None else omega_value
    log_lam = log_lambda_n(n, Q)
    half_growth = LAMBDA_SCALE / 2.0

    log_r_printed = math.exp(math.log(half_growth) - n * math.log(Q))
    printed_bound = math.exp(half_growth) * (
            math.exp(log_r_printed) * math.expm1(half_growth) + math.pi / Q
    )
    printed = MarginReading(
        name="printed",
        lambda_used=math.exp(log_lam),
        q_max=Q ** (n + 1),
        r_max=math.exp(log_r_printed),
        bound=printed_bound,
        verdict=printed_bound < omega_value,
    )
    readings = [
        printed,
        _reading("conservative", log_lam, Q ** (n + 1), Q, omega_value),
        _reading("parity_lambda_n", log_lam, (2 * Q) ** (n + 1), Q, omega_value),
        _reading("parity_corrected", log_lambda_parity_corrected(n, Q), (2 * Q) ** (n + 1), Q, omega_value),
    ]
    return TheoremMargin(
        n=n,
        Q=Q,
        bound=printed.bound,
        omega=omega_value,
        verdict=printed.verdict,
        readings=readings,
    )


def _isometry_class(A: Isometry, tolerances: Tolerances) -> IsometryClass | None:
    try:
        return classify_isometry(
            A,
            tol_c=tolerances.CLASSIFY,
            tol_identity=tolerances.IDENTITY,
            cond_low=tolerances.GRAM_COND_LOW,
            cond_high=tolerances.GRAM_COND_HIGH,
        )
    except exceptions.IndeterminateClassification as exc:
        _log.info("%s", exc.message)
        return None


def certify_displacement(
        A: Isometry,
        Q: int = DEFAULT_Q,
        omega_value: float | None = None,
        *,
        tolerances: Tolerances = TOLERANCE,
) -> BoundReport:
    """
    Проверка цепочки оценок на конкретной изометрии

    Изометрия, принятая с допуском грубее FORM (например, с округленными
    элементами), сначала проецируется на Sp(n,1). Затем A приводится
    к вертикальной геодезической, раскладывается как D·R, для R подбирается q,
    после чего нормы ‖A‖, ‖A^q‖, ‖A^q − I‖, ‖A^q − R^q‖ измеряются напрямую
    и сравниваются с оценками.

    :param A: изометрия полупространственной модели
    :param Q: параметр приближения
    :param omega_value: порог (по умолчанию ω)
    :param tolerances: допуски запуска
    :return:
    """
    omega_value = omega() if omega_value is None else omega_value
    if A.tolerance > tolerances.FORM:
        A = project_to_group(A, tolerance=tolerances.FORM)
    isometry_class = _isometry_class(A, tolerances)
    if fixes_origin(A, tolerances.FIXES_ORIGIN):
        return BoundReport(
            outcome=CertifyOutcome.FIXES_ORIGIN,
            n=A.n,
            Q=Q,
            omega=omega_value,
            isometry_class=isometry_class,
        )

    vertical = normalize_to_vertical(A, tolerances=tolerances)
    decomposition = dilation_decompose(vertical, tolerances=tolerances)
    r = decomposition.r
    certificate = approximate_rotation(decomposition.R, Q, tolerances=tolerances)
    q = certificate.q

    I = QMatrix.identity(A.form.size)
    Aq = vertical.matrix.power(q)
    Rq = decomposition.R.matrix.power(q)
    norm_A = spectral_norm(vertical.matrix)
    norm_Aq = spectral_norm(Aq)
    norm_Aq_minus_I = spectral_norm(Aq - I)
    norm_Aq_minus_Rq = spectral_norm(Aq - Rq)

    product = norm_Aq * norm_Aq_minus_I
    lemma_bound = resume_bound(r, q, Q)
    power_gap_bound = r * math.expm1(q * math.log(r))
    _log.debug("r = %.12g, q = %d, product = %.12g, bound = %.12g", r, q, product, lemma_bound)

    return BoundReport(
        n=A.n,
        Q=Q,
        q=q,
        delta=decomposition.delta,
        r=r,
        norm_A=norm_A,
        norm_Aq=norm_Aq,
        norm_Aq_minus_I=norm_Aq_minus_I,
        norm_Aq_minus_Rq=norm_Aq_minus_Rq,
        rotation_achieved=certificate.achieved,
        lemma_bound=lemma_bound,
        product=product,
        omega=omega_value,
        verdict=product < omega_value,
        within_stated_range=certificate.within_stated_range,
        isometry_class=isometry_class,
        slack_norm_A=r - norm_A,
        slack_power_gap=power_gap_bound - norm_Aq_minus_Rq,
        slack_resume=lemma_bound - product,
        slack_omega=omega_value - product,
    )
