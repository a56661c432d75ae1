from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from src import exceptions
from src.config import TOLERANCE
from src.models.qmatrix import QMatrix
from src.models.quaternion import Quaternion
from src.models.state import IsometryClass, ModelKind, PointClass


def half_space_matrix(n: int) -> QMatrix:
    J = np.zeros((n + 1, n + 1))
    J[0, n] = J[n, 0] = 1.0
    J[1:n, 1:n] = np.eye(n - 1)
    return QMatrix.from_rows(J.tolist())


def ball_matrix(n: int) -> QMatrix:
    return QMatrix.diag([1.0] * n + [-1.0])


@dataclass(frozen=True)
class ModelForm:
    """
    Эрмитова форма сигнатуры (n, 1): ⟨Z, W⟩ = W*·J·Z
    """
    n: int
    kind: ModelKind
    matrix: QMatrix

    def __post_init__(self):
        if self.n < 2:
            raise exceptions.BadRequest("Кватернионная размерность должна быть n ≥ 2")
        if self.matrix.shape != (self.n + 1, self.n + 1):
            raise exceptions.ShapeMismatch("Матрица формы должна иметь размер (n+1)×(n+1)")
        if not self.matrix.allclose(self.matrix.adjoint(), tol=0.0):
            raise exceptions.BadRequest("Матрица формы должна быть самосопряженной")

    @classmethod
    def half_space(cls, n: int) -> "ModelForm":
        return cls(n, ModelKind.HALF_SPACE, half_space_matrix(n))

    @classmethod
    def ball(cls, n: int) -> "ModelForm":
        return cls(n, ModelKind.BALL, ball_matrix(n))

    @classmethod
    def of_kind(cls, n: int, kind: ModelKind) -> "ModelForm":
        return cls.half_space(n) if kind == ModelKind.HALF_SPACE else cls.ball(n)

    @property
    def size(self) -> int:
        return self.n + 1

    def signature(self) -> tuple[int, int]:
        values = np.linalg.eigvalsh(self.matrix.adjoint_image())
        # каждое значение χ(J) входит дважды
        return int((values > 0).sum()) // 2, int((values < 0).sum()) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, ModelForm) and self.n == other.n and self.kind == other.kind

    def __hash__(self) -> int:
        return hash((self.n, self.kind))


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """
    Точка P(ℍ^{n+1}): вектор с точностью до правого умножения на кватернион
    """
    coords: QMatrix
    form: ModelForm

    def __post_init__(self):
        if self.coords.shape != (self.form.size, 1):
            raise exceptions.ShapeMismatch(
                f"Ожидается столбец длины {self.form.size}, получено {self.coords.shape}"
            )
        if self.coords.max_abs() == 0:
            raise exceptions.ZeroVector()

    @classmethod
    def from_entries(cls, entries, form: ModelForm) -> "ProjectivePoint":
        return cls(QMatrix.column(list(entries)), form)

    @cached_property
    def point_class(self) -> PointClass:
        from src.services.numeric.geometry import classify_point
        return classify_point(self.coords, self.form)

    def scaled(self, q: Quaternion) -> "ProjectivePoint":
        return ProjectivePoint(self.coords.right_mul(q), self.form)


@dataclass(frozen=True)
class HorosphericalCoords:
    """
    Горосферические координаты (ξ, v, u) полупространственной модели
    """
    xi: tuple[Quaternion, ...]
    v: Quaternion
    u: float

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(self.xi))
        if abs(self.v.w) > 1e-12:
            raise exceptions.BadRequest("Координата v должна быть чисто мнимой")

    @property
    def n(self) -> int:
        return len(self.xi) + 1

    @property
    def is_interior(self) -> bool:
        return self.u > 0


@dataclass(frozen=True, eq=False)
class Isometry:
    """
    Элемент Sp(n,1): матрица, сохраняющая форму, A*·J·A = J
    """
    matrix: QMatrix
    form: ModelForm
    tolerance: float = field(default=TOLERANCE.FORM, repr=False)

    def __post_init__(self):
        if self.matrix.shape != (self.form.size, self.form.size):
            raise exceptions.ShapeMismatch(
                f"Ожидается матрица {self.form.size}×{self.form.size}, получено {self.matrix.shape}"
            )
        defect = self.form_defect()
        if defect > self.tolerance:
            raise exceptions.NotAnIsometry(
                f"Матрица не сохраняет форму: max|A*JA − J| = {defect:.3g}"
            )

    def form_defect(self) -> float:
        J = self.form.matrix
        return (self.matrix.adjoint() @ J @ self.matrix - J).max_abs()

    @property
    def n(self) -> int:
        return self.form.n

    @cached_property
    def class_tag(self) -> IsometryClass:
        from src.services.numeric.geometry import classify_isometry
        return classify_isometry(self)

    def _check_form(self, other: "Isometry"):
        if self.form != other.form:
            raise exceptions.ShapeMismatch("Изометрии заданы в разных моделях")

    def __matmul__(self, other: "Isometry") -> "Isometry":
        if not isinstance(other, Isometry):
            return NotImplemented
        self._check_form(other)
        return Isometry(self.matrix @ other.matrix, self.form, max(self.tolerance, other.tolerance) * 4)

    def inverse(self) -> "Isometry":
        # J² = I для обеих форм, поэтому A⁻¹ = J·A*·J
        J = self.form.matrix
        return Isometry(J @ self.matrix.adjoint() @ J, self.form, self.tolerance)

    def power(self, k: int) -> "Isometry":
        if k < 0:
            return self.inverse().power(-k)
        return Isometry(self.matrix.power(k), self.form, self.tolerance * max(k, 1) * 4)

    def conjugate_by(self, G: "Isometry") -> "Isometry":
        """G·A·G⁻¹"""
        self._check_form(G)
        return Isometry(G.matrix @ self.matrix @ G.inverse().matrix, self.form, self.tolerance * 16)

    def apply(self, point: ProjectivePoint) -> ProjectivePoint:
        if point.form != self.form:
            raise exceptions.ShapeMismatch("Точка и изометрия заданы в разных моделях")
        return ProjectivePoint(self.matrix @ point.coords, self.form)


@dataclass(frozen=True)
class DilationDecomposition:
    """
    A = D·R: растяжение D = diag(r, I, 1/r) и элемент R стабилизатора o
    """
    r: float
    delta: float
    D: Isometry
    R: Isometry
