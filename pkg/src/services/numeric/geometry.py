import logging
import math

import numpy as np

from src import exceptions
from src.config import TOLERANCE, Tolerances
from src.models.geometry import (
    DilationDecomposition,
    HorosphericalCoords,
    Isometry,
    ModelForm,
    ProjectivePoint,
)
from src.models.qmatrix import QMatrix
from src.models.quaternion import Quaternion
from src.models.state import IsometryClass, ModelKind, PointClass
from src.services.numeric.linalg import eigen_condition, gram_schmidt_unitary

_log = logging.getLogger(__name__)

Vector = QMatrix | ProjectivePoint

PROJECTION_ITERATIONS = 12
PROJECTION_FLOOR = 1e-15


def _coords(Z: Vector) -> QMatrix:
    return Z.coords if isinstance(Z, ProjectivePoint) else Z


def _require_half_space(form: ModelForm):
    if form.kind != ModelKind.HALF_SPACE:
        raise exceptions.BadRequest("Операция определена только для полупространственной модели")


# точки

def origin(n: int) -> ProjectivePoint:
    """o = (−1, 0, …, 0, 1)ᵗ"""
    return ProjectivePoint.from_entries([-1.0] + [0.0] * (n - 1) + [1.0], ModelForm.half_space(n))


def q_infinity(n: int) -> ProjectivePoint:
    return ProjectivePoint.from_entries([1.0] + [0.0] * n, ModelForm.half_space(n))


def ball_origin(n: int) -> ProjectivePoint:
    return ProjectivePoint.from_entries([0.0] * n + [1.0], ModelForm.ball(n))


def pairing(Z: Vector, W: Vector, form: ModelForm) -> Quaternion:
    """
    ⟨Z, W⟩ = W*·J·Z
    """
    Z, W = _coords(Z), _coords(W)
    if Z.shape != (form.size, 1) or W.shape != (form.size, 1):
        raise exceptions.ShapeMismatch(
            f"Векторы должны иметь длину {form.size}, получено {Z.shape} и {W.shape}"
        )
    return (W.adjoint() @ form.matrix @ Z).entry(0, 0)


def _unit(Z: QMatrix) -> QMatrix:
    norm = Z.frobenius_norm()
    if norm == 0:
        raise exceptions.ZeroVector()
    return Z.scale(1.0 / norm)


def classify_point(Z: Vector, form: ModelForm, tol: float = TOLERANCE.NULL_CONE) -> PointClass:
    """
    Знак ⟨Z, Z⟩ после нормировки Z на единичную евклидову длину
    """
    value = pairing(_unit(_coords(Z)), _unit(_coords(Z)), form).w
    if value < -tol:
        return PointClass.NEGATIVE
    if value > tol:
        return PointClass.POSITIVE
    return PointClass.NULL


def _require_negative(X: ProjectivePoint, form: ModelForm, tol: float):
    if classify_point(X, form, tol) != PointClass.NEGATIVE:
        raise exceptions.NotInterior()


def distance(
        X: ProjectivePoint,
        Y: ProjectivePoint,
        form: ModelForm | None = None,
        *,
        tol: float = TOLERANCE.NULL_CONE,
        arccosh_tol: float = TOLERANCE.ARCCOSH,
) -> float:
    """
    Расстояние ρ: cosh²(ρ/2) = |⟨X,Y⟩|² / (⟨X,X⟩⟨Y,Y⟩)

    :param X: внутренняя точка
    :param Y: внутренняя точка
    :param form: форма (по умолчанию форма X)
    :return: ρ ≥ 0
    """
    form = form or X.form
    _require_negative(X, form, tol)
    _require_negative(Y, form, tol)
    x, y = _unit(X.coords), _unit(Y.coords)
    xy = pairing(x, y, form)
    ratio = xy.norm2() / (pairing(x, x, form).w * pairing(y, y, form).w)
    if ratio < 1.0 - arccosh_tol:
        raise exceptions.DomainRejection(
            f"Аргумент arccosh меньше 1: cosh²(ρ/2) = {ratio:.12g}"
        )
    return 2.0 * math.asinh(math.sqrt(max(ratio - 1.0, 0.0)))


def projectively_equal(X: Vector, Y: Vector, tol: float = TOLERANCE.FIXES_ORIGIN) -> bool:
    """
    X = Y·c для некоторого кватерниона c
    """
    x, y = _unit(_coords(X)), _unit(_coords(Y))
    c = (y.adjoint() @ x).entry(0, 0)
    return (x - y.right_mul(c)).frobenius_norm() <= tol


# преобразование Кэли и карты

def cayley_matrix(n: int) -> QMatrix:
    s = math.sqrt(2.0) / 2.0
    C = np.zeros((n + 1, n + 1))
    C[0, 0] = C[0, n] = C[n, 0] = s
    C[n, n] = -s
    C[1:n, 1:n] = np.eye(n - 1)
    return QMatrix.from_rows(C.tolist())


def cayley_to_half_space(Z: Vector) -> QMatrix:
    Z = _coords(Z)
    return cayley_matrix(Z.rows - 1) @ Z


def cayley_to_ball(Z: Vector) -> QMatrix:
    # C² = I
    return cayley_to_half_space(Z)


def cayley_transport(A: Isometry) -> Isometry:
    """C·A·C: перенос изометрии в другую модель"""
    C = cayley_matrix(A.n)
    target = ModelForm.ball(A.n) if A.form.kind == ModelKind.HALF_SPACE else ModelForm.half_space(A.n)
    return Isometry(C @ A.matrix @ C, target, A.tolerance * 4)


def chart_normalize(Z: Vector, tol: float = TOLERANCE.NULL_CONE) -> QMatrix:
    Z = _coords(Z)
    last = Z.entry(Z.rows - 1, 0)
    if last.modulus() <= tol * Z.frobenius_norm():
        raise exceptions.ChartError()
    return Z.right_mul(last.inverse())


def to_horospherical(Z: Vector, tol: float = TOLERANCE.NULL_CONE) -> HorosphericalCoords:
    """
    (ξ, v, u) = ((z₂, …, zₙ), 2·Im(z₁), −(2ℜ(z₁) + Σ|zᵢ|²)) при z_{n+1} = 1
    """
    if isinstance(Z, ProjectivePoint):
        _require_half_space(Z.form)
    Z = chart_normalize(Z, tol)
    entries = [Z.entry(k, 0) for k in range(Z.rows)]
    z1, xi = entries[0], entries[1:-1]
    xi_norm2 = sum(q.norm2() for q in xi)
    return HorosphericalCoords(
        xi=tuple(xi),
        v=z1.imaginary * 2.0,
        u=float(-(2.0 * z1.w + xi_norm2)),
    )


def from_horospherical(h: HorosphericalCoords) -> ProjectivePoint:
    """
    z₁ = (−u − |ξ|² + v)/2, z_{n+1} = 1
    """
    xi_norm2 = sum(q.norm2() for q in h.xi)
    z1 = (h.v + (-h.u - xi_norm2)) / 2.0
    return ProjectivePoint.from_entries([z1, *h.xi, 1.0], ModelForm.half_space(h.n))


# изометрии

def dilation_matrix(n: int, r: float) -> QMatrix:
    return QMatrix.diag([r] + [1.0] * (n - 1) + [1.0 / r])


def dilation(n: int, r: float, tolerance: float = TOLERANCE.FORM) -> Isometry:
    """D(r) = diag(r, I, 1/r)"""
    return Isometry(dilation_matrix(n, r), ModelForm.half_space(n), tolerance)


def stabilizer(theta: QMatrix, mu: Quaternion, tolerance: float = TOLERANCE.FORM) -> Isometry:
    """
    C·blockdiag(Θ, μ)·C: элемент K, оставляющий o на месте
    """
    n = theta.rows
    C = cayley_matrix(n)
    block = QMatrix.block_diag(theta, QMatrix.diag([mu]))
    return Isometry(C @ block @ C, ModelForm.half_space(n), tolerance)


def random_quaternion_matrix(rows: int, cols: int, rng: np.random.Generator) -> QMatrix:
    return QMatrix(rng.standard_normal((rows, cols, 4)))


def random_unit_quaternion(rng: np.random.Generator) -> Quaternion:
    q = rng.standard_normal(4)
    return Quaternion(*(q / np.linalg.norm(q)))


def random_unitary(
        m: int,
        rng: np.random.Generator,
        scale: float | None = None,
        *,
        pivot_tol: float = TOLERANCE.PIVOT,
) -> QMatrix:
    """
    Случайная матрица из Sp(m); при заданном scale близкая к I
    """
    noise = random_quaternion_matrix(m, m, rng)
    if scale is None:
        return gram_schmidt_unitary(noise, pivot_tol)
    return gram_schmidt_unitary(QMatrix.identity(m) + noise.scale(scale), pivot_tol)


def random_stabilizer(
        n: int,
        rng: np.random.Generator,
        scale: float | None = None,
        *,
        tolerances: Tolerances = TOLERANCE,
) -> Isometry:
    theta = random_unitary(n, rng, scale, pivot_tol=tolerances.PIVOT)
    if scale is None:
        mu = random_unit_quaternion(rng)
    else:
        q = np.array([1.0, 0.0, 0.0, 0.0]) + scale * rng.standard_normal(4)
        mu = Quaternion(*(q / np.linalg.norm(q)))
    return stabilizer(theta, mu, tolerances.FORM)


def _as_rng(seed: int | np.random.Generator | list[int]) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_isometry(
        n: int,
        seed: int | np.random.Generator,
        spread: float,
        *,
        tolerances: Tolerances = TOLERANCE,
) -> Isometry:
    """
    K₁·D(r)·K₂, где K₁, K₂ случайные элементы стабилизатора o
    и ln r равномерно распределен на [0, spread]

    :param n: кватернионная размерность (n ≥ 2)
    :param seed: зерно генератора или сам генератор
    :param spread: верхняя граница ln r
    :return:
    """
    if n < 2:
        raise exceptions.BadRequest("Кватернионная размерность должна быть n ≥ 2")
    if spread < 0:
        raise exceptions.BadRequest("Параметр spread должен быть неотрицательным")
    rng = _as_rng(seed)
    k1 = random_stabilizer(n, rng, tolerances=tolerances)
    k2 = random_stabilizer(n, rng, tolerances=tolerances)
    r = math.exp(rng.uniform(0.0, spread)) if spread > 0 else 1.0
    return k1 @ dilation(n, r, tolerances.FORM) @ k2


def random_interior_point(
        n: int,
        rng: np.random.Generator,
        spread: float = 1.0,
        *,
        tolerances: Tolerances = TOLERANCE,
) -> ProjectivePoint:
    return random_isometry(n, rng, spread, tolerances=tolerances).apply(origin(n))


def fixes_origin(A: Isometry, tol: float = TOLERANCE.FIXES_ORIGIN) -> bool:
    _require_half_space(A.form)
    o = origin(A.n)
    return projectively_equal(A.apply(o), o, tol)


def is_projective_identity(A: Isometry, tol: float = TOLERANCE.IDENTITY) -> bool:
    I = QMatrix.identity(A.form.size)
    return min((A.matrix - I).max_abs(), (A.matrix + I).max_abs()) <= tol


def classify_isometry(
        A: Isometry,
        *,
        tol_c: float = TOLERANCE.CLASSIFY,
        tol_identity: float = TOLERANCE.IDENTITY,
        cond_low: float = TOLERANCE.GRAM_COND_LOW,
        cond_high: float = TOLERANCE.GRAM_COND_HIGH,
) -> IsometryClass:
    """
    Тип изометрии

    Локсодромические и эллиптические элементы диагонализуемы, поэтому
    вырожденный собственный базис χ(A) означает параболический элемент.
    """
    if is_projective_identity(A, tol_identity):
        return IsometryClass.IDENTITY
    values, cond = eigen_condition(A.matrix)
    if cond > cond_high:
        return IsometryClass.PARABOLIC
    radius = float(np.abs(values).max())
    if radius > 1.0 + tol_c:
        return IsometryClass.LOXODROMIC
    if cond < cond_low:
        return IsometryClass.ELLIPTIC
    _log.debug("Число обусловленности %g, спектральный радиус %.12g", cond, radius)
    raise exceptions.IndeterminateClassification(
        f"Тип изометрии не определен: r_σ = {radius:.12g}, cond = {cond:.3g}"
    )


def normalize_to_vertical(A: Isometry, *, tolerances: Tolerances = TOLERANCE) -> Isometry:
    """
    Сопряжение элементом стабилизатора o, после которого A·o лежит
    на вертикальной геодезической (0, ∞)
    """
    _require_half_space(A.form)
    if fixes_origin(A, tolerances.FIXES_ORIGIN):
        raise exceptions.FixesOrigin()
    n = A.n
    C = cayley_matrix(n)
    b = chart_normalize(C @ A.matrix @ origin(n).coords, tolerances.NULL_CONE)
    w = QMatrix(b.data[:n])
    pivot = int(np.argmax(w.moduli()[:, 0]))
    basis = [w] + [
        QMatrix.column([1.0 if i == k else 0.0 for i in range(n)])
        for k in range(n) if k != pivot
    ]
    V = gram_schmidt_unitary(QMatrix(np.concatenate([v.data for v in basis], axis=1)), tolerances.PIVOT)
    G = stabilizer(V.adjoint(), Quaternion(1.0), tolerances.FORM)
    return A.conjugate_by(G)


def dilation_decompose(A: Isometry, *, tolerances: Tolerances = TOLERANCE) -> DilationDecomposition:
    """
    Разложение A = D·R, где D = diag(r, I, 1/r) и R·o = o

    :param A: изометрия, переводящая o в точку вертикальной геодезической выше o
    :param tolerances: допуски (FIXES_ORIGIN, VERTICAL, NULL_CONE, FORM)
    :return:
    """
    _require_half_space(A.form)
    n = A.n
    if fixes_origin(A, tolerances.FIXES_ORIGIN):
        raise exceptions.FixesOrigin()
    h = to_horospherical(A.apply(origin(n)), tolerances.NULL_CONE)
    offset = math.sqrt(sum(q.norm2() for q in h.xi) + h.v.norm2())
    if offset > tolerances.VERTICAL * max(1.0, h.u) or h.u <= 0:
        raise exceptions.NotVertical()
    r = math.sqrt(h.u / 2.0)
    if r <= 1.0:
        raise exceptions.NotVertical("Образ начала координат лежит ниже o на вертикальной геодезической")
    D = dilation(n, r, tolerances.FORM)
    R = Isometry(D.inverse().matrix @ A.matrix, A.form, A.tolerance * 4)
    return DilationDecomposition(r=r, delta=2.0 * math.log(r), D=D, R=R)


def project_to_group(
        A: Isometry,
        *,
        tolerance: float = TOLERANCE.FORM,
        max_iterations: int = PROJECTION_ITERATIONS,
) -> Isometry:
    """
    Проекция почти изометрии на Sp(n,1) итерацией Ньютона–Шульца
    X ← ½·X·(3I − J·X*·J·X)

    Для X = U·(I + E) с U ∈ Sp(n,1) шаг оставляет только часть E из алгебры
    sp(n,1), поэтому дефект формы убывает квадратично. Итерации идут,
    пока дефект уменьшается.

    :param A: изометрия, принятая с грубым допуском
    :param tolerance: допуск результата (не меньше достигнутого дефекта)
    :return:
    """
    J = A.form.matrix
    three = QMatrix.identity(A.form.size).scale(3.0)
    X = A.matrix
    defect = A.form_defect()
    initial = defect
    for _ in range(max_iterations):
        if defect <= PROJECTION_FLOOR:
            break
        candidate = (X @ (three - J @ X.adjoint() @ J @ X)).scale(0.5)
        candidate_defect = (candidate.adjoint() @ J @ candidate - J).max_abs()
        if candidate_defect >= defect:
            break
        X, defect = candidate, candidate_defect
    _log.debug("Проекция на Sp(n,1): дефект %.3g → %.3g", initial, defect)
    return Isometry(X, A.form, max(tolerance, 4.0 * defect))
