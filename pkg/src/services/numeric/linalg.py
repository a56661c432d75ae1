import logging

import numpy as np

from src import exceptions
from src.config import TOLERANCE
from src.models.qmatrix import ComplexMatrix, QMatrix
from src.models.quaternion import ComplexRep

Spectrum = list[ComplexRep]

_log = logging.getLogger(__name__)


def _require_square(A: QMatrix):
    if not A.is_square:
        raise exceptions.ShapeMismatch(f"Ожидается квадратная матрица, получено {A.shape}")


def adjoint_embed(A: QMatrix) -> ComplexMatrix:
    """
    Комплексное вложение χ(A) = [[A₁, A₂], [−conj(A₂), conj(A₁)]]

    :param A: квадратная матрица m×m
    :return: комплексная матрица 2m×2m
    """
    _require_square(A)
    return A.adjoint_image()


def hermitian_eigenvalues(M: ComplexMatrix) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(M)
    except np.linalg.LinAlgError as exc:
        raise exceptions.ConvergenceError(f"eigvalsh не сошелся: {exc}")


def _eigenvalues(M: ComplexMatrix) -> np.ndarray:
    try:
        return np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise exceptions.ConvergenceError(f"eigvals не сошелся: {exc}")


def eigen_condition(A: QMatrix) -> tuple[np.ndarray, float]:
    """
    Собственные значения χ(A) и число обусловленности матрицы Грама
    нормированного собственного базиса

    Большое число обусловленности означает, что базиса нет (A не диагонализуема).
    """
    _require_square(A)
    try:
        values, vectors = np.linalg.eig(adjoint_embed(A))
    except np.linalg.LinAlgError as exc:
        raise exceptions.ConvergenceError(f"eig не сошелся: {exc}")
    vectors = vectors / np.linalg.norm(vectors, axis=0, keepdims=True)
    gram = vectors.conj().T @ vectors
    with np.errstate(divide="ignore", invalid="ignore"):
        cond = float(np.linalg.cond(gram))
    if not np.isfinite(cond):
        cond = float("inf")
    return values, cond


def is_normal(A: QMatrix, tol: float = TOLERANCE.UNITARY) -> bool:
    _require_square(A)
    M = adjoint_embed(A)
    scale = max(1.0, float(np.abs(M).max()) ** 2)
    return float(np.abs(M @ M.conj().T - M.conj().T @ M).max()) <= tol * scale


def pair_conjugates(values: np.ndarray, tol: float = TOLERANCE.PAIRING) -> Spectrum:
    """
    Разбиение собственных значений χ(A) на сопряженные пары

    Сортировка по (ℜλ, |ℑλ|), затем жадное сопоставление соседних значений.
    Из каждой пары остается представитель с ℑλ ≥ 0.
    """
    remaining = sorted(values, key=lambda v: (v.real, abs(v.imag)))
    result: Spectrum = []
    while remaining:
        value = remaining.pop(0)
        target = value.conjugate()
        best = min(range(len(remaining)), key=lambda k: abs(remaining[k] - target), default=None)
        if best is None or abs(remaining[best] - target) > tol * max(1.0, abs(value)):
            raise exceptions.PairingError(
                f"Для {value:.6g} нет сопряженной пары в пределах {tol:g}"
            )
        mate = remaining.pop(best)
        re = 0.5 * (value.real + mate.real)
        im = 0.5 * (abs(value.imag) + abs(mate.imag))
        result.append(ComplexRep(float(re), float(im)))
    result.sort(key=lambda rep: (rep.re, rep.im))
    return result


def spectrum(
        A: QMatrix,
        tol: float = TOLERANCE.PAIRING,
        *,
        normal_tol: float = TOLERANCE.UNITARY,
) -> Spectrum:
    """
    Классы сопряженности правых собственных значений

    Поддерживаются только нормальные матрицы.

    :param A: квадратная нормальная матрица
    :return: m представителей в ℂ⁺ (с кратностями)
    """
    _require_square(A)
    if not is_normal(A, normal_tol):
        raise exceptions.NonNormalMatrix()
    return pair_conjugates(_eigenvalues(adjoint_embed(A)), tol=tol)


def spectral_radius(A: QMatrix) -> float:
    """
    r_σ(A) = max |λ|

    Модули не зависят от разбиения на пары, поэтому нормальность не требуется.
    """
    _require_square(A)
    return float(np.abs(_eigenvalues(adjoint_embed(A))).max())


def spectral_norm(A: QMatrix) -> float:
    """
    ‖A‖ = sqrt(r_σ(A*A))

    :param A: произвольная (в том числе прямоугольная) матрица
    :return:
    """
    gram = adjoint_embed(A.adjoint() @ A)
    gram = 0.5 * (gram + gram.conj().T)
    return float(np.sqrt(max(hermitian_eigenvalues(gram).max(), 0.0)))


def is_unitary(A: QMatrix, tol: float = TOLERANCE.UNITARY) -> bool:
    _require_square(A)
    return (A.adjoint() @ A - QMatrix.identity(A.rows)).max_abs() <= tol


def unitary_angles(
        R: QMatrix,
        tol: float = TOLERANCE.UNITARY,
        *,
        pairing_tol: float = TOLERANCE.PAIRING,
) -> list[float]:
    """
    Аргументы собственных значений унитарной матрицы

    :param R: унитарная матрица
    :return: углы в [0, π] по возрастанию
    """
    _require_square(R)
    if not is_unitary(R, tol):
        raise exceptions.NotUnitary()
    reps = spectrum(R, pairing_tol, normal_tol=tol)
    return sorted(float(np.arctan2(rep.im, rep.re)) for rep in reps)


def gram_schmidt_unitary(A: QMatrix, pivot_tol: float = TOLERANCE.PIVOT) -> QMatrix:
    """
    Ортонормализация столбцов относительно ⟨x, y⟩ = y*·x

    Модифицированный Грам–Шмидт с повторной ортогонализацией,
    коэффициенты проекций умножаются справа.
    """
    _require_square(A)
    columns: list[QMatrix] = []
    for k in range(A.cols):
        v = A.column_at(k)
        for _ in range(2):
            for u in columns:
                coefficient = (u.adjoint() @ v).entry(0, 0)
                v = v - u.right_mul(coefficient)
        norm = v.frobenius_norm()
        if norm < pivot_tol:
            _log.debug("Ведущий элемент %g на столбце %d", norm, k)
            raise exceptions.RankDeficiency(f"Столбец {k} линейно зависим от предыдущих (норма {norm:.3g})")
        columns.append(v.scale(1.0 / norm))
    return QMatrix(np.concatenate([u.data for u in columns], axis=1))
