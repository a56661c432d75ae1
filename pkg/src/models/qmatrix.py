from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from src import exceptions
from src.config import TOLERANCE
from src.models.quaternion import Quaternion

ComplexMatrix = npt.NDArray[np.complex128]


def _split(q: Quaternion) -> tuple[complex, complex]:
    return complex(q.w, q.x), complex(q.y, q.z)


@dataclass(frozen=True, eq=False)
class QMatrix:
    """
    Матрица над ℍ

    Хранится как массив формы (rows, cols, 4) с компонентами (w, x, y, z).
    Запись A = A₁ + A₂·j, где A₁ = w + x·i и A₂ = y + z·i комплексные блоки.
    """
    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=np.float64)
        if data.ndim != 3 or data.shape[2] != 4 or data.shape[0] < 1 or data.shape[1] < 1:
            raise exceptions.ShapeMismatch("Ожидается массив формы (rows, cols, 4)")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def entries(self) -> list[Quaternion]:
        return [Quaternion(*map(float, q)) for q in self.data.reshape(-1, 4)]

    def entry(self, row: int, col: int) -> Quaternion:
        return Quaternion(*map(float, self.data[row, col]))

    def column_at(self, col: int) -> "QMatrix":
        return QMatrix(self.data[:, col:col + 1, :])

    # constructors

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence[Quaternion]) -> "QMatrix":
        if len(entries) != rows * cols:
            raise exceptions.ShapeMismatch(
                f"Ожидалось {rows * cols} элементов, получено {len(entries)}"
            )
        data = np.array([[q.w, q.x, q.y, q.z] for q in entries], dtype=np.float64)
        return cls(data.reshape(rows, cols, 4))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Quaternion | float]]) -> "QMatrix":
        data = []
        for row in rows:
            line = []
            for item in row:
                q = item if isinstance(item, Quaternion) else Quaternion.real(item)
                line.append([q.w, q.x, q.y, q.z])
            data.append(line)
        return cls(np.array(data, dtype=np.float64))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "QMatrix":
        return cls(np.zeros((rows, rows if cols is None else cols, 4)))

    @classmethod
    def identity(cls, size: int) -> "QMatrix":
        data = np.zeros((size, size, 4))
        data[np.arange(size), np.arange(size), 0] = 1.0
        return cls(data)

    @classmethod
    def diag(cls, values: Sequence[Quaternion | float]) -> "QMatrix":
        size = len(values)
        data = np.zeros((size, size, 4))
        for k, value in enumerate(values):
            q = value if isinstance(value, Quaternion) else Quaternion.real(value)
            data[k, k] = [q.w, q.x, q.y, q.z]
        return cls(data)

    @classmethod
    def column(cls, values: Sequence[Quaternion | float]) -> "QMatrix":
        return cls.from_rows([[value] for value in values])

    @classmethod
    def from_complex_parts(cls, a1: ComplexMatrix, a2: ComplexMatrix) -> "QMatrix":
        a1 = np.atleast_2d(np.asarray(a1, dtype=np.complex128))
        a2 = np.atleast_2d(np.asarray(a2, dtype=np.complex128))
        if a1.shape != a2.shape:
            raise exceptions.ShapeMismatch("Комплексные блоки разных размеров")
        return cls(np.stack([a1.real, a1.imag, a2.real, a2.imag], axis=-1))

    @classmethod
    def from_adjoint_image(cls, image: ComplexMatrix) -> "QMatrix":
        image = np.asarray(image, dtype=np.complex128)
        size, rem = divmod(image.shape[0], 2)
        if rem or image.shape[0] != image.shape[1]:
            raise exceptions.ShapeMismatch("Образ вложения имеет форму 2m×2m")
        return cls.from_complex_parts(image[:size, :size], image[:size, size:])

    @classmethod
    def block_diag(cls, *blocks: "QMatrix") -> "QMatrix":
        rows = sum(block.rows for block in blocks)
        cols = sum(block.cols for block in blocks)
        data = np.zeros((rows, cols, 4))
        r = c = 0
        for block in blocks:
            data[r:r + block.rows, c:c + block.cols] = block.data
            r += block.rows
            c += block.cols
        return cls(data)

    # complex form

    def complex_parts(self) -> tuple[ComplexMatrix, ComplexMatrix]:
        d = self.data
        return d[..., 0] + 1j * d[..., 1], d[..., 2] + 1j * d[..., 3]

    def adjoint(self) -> "QMatrix":
        a1, a2 = self.complex_parts()
        return QMatrix.from_complex_parts(a1.conj().T, -a2.T)

    # arithmetic

    def _check_same_shape(self, other: "QMatrix"):
        if self.shape != other.shape:
            raise exceptions.ShapeMismatch(f"Размеры {self.shape} и {other.shape} не совпадают")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self.data + other.data)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other)
        return QMatrix(self.data - other.data)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self.data)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise exceptions.ShapeMismatch(f"Нельзя умножить {self.shape} на {other.shape}")
        a1, a2 = self.complex_parts()
        b1, b2 = other.complex_parts()
        return QMatrix.from_complex_parts(
            a1 @ b1 - a2 @ b2.conj(),
            a1 @ b2 + a2 @ b1.conj(),
        )

    def scale(self, value: float) -> "QMatrix":
        return QMatrix(self.data * value)

    def right_mul(self, q: Quaternion) -> "QMatrix":
        """A·q"""
        c, d = _split(q)
        a1, a2 = self.complex_parts()
        return QMatrix.from_complex_parts(
            a1 * c - a2 * np.conj(d),
            a1 * d + a2 * np.conj(c),
        )

    def left_mul(self, q: Quaternion) -> "QMatrix":
        """q·A"""
        c, d = _split(q)
        a1, a2 = self.complex_parts()
        return QMatrix.from_complex_parts(
            c * a1 - d * a2.conj(),
            c * a2 + d * a1.conj(),
        )

    def inverse(self, max_cond: float = TOLERANCE.SINGULAR_COND) -> "QMatrix":
        if not self.is_square:
            raise exceptions.ShapeMismatch("Обратная матрица определена только для квадратных матриц")
        image = self.adjoint_image()
        if not np.isfinite(image).all() or np.linalg.cond(image) > max_cond:
            raise exceptions.SingularMatrix()
        return QMatrix.from_adjoint_image(np.linalg.inv(image))

    def power(self, k: int) -> "QMatrix":
        """
        Степень A^k двоичным возведением

        :param k: показатель (k ≥ 0)
        :return:
        """
        if not self.is_square:
            raise exceptions.ShapeMismatch("Степень определена только для квадратных матриц")
        if k < 0:
            raise exceptions.BadRequest("Показатель степени должен быть неотрицательным")
        result = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def adjoint_image(self) -> ComplexMatrix:
        a1, a2 = self.complex_parts()
        return np.block([[a1, a2], [-a2.conj(), a1.conj()]])

    # norms

    def moduli(self) -> np.ndarray:
        return np.sqrt(np.power(self.data, 2).sum(axis=-1))

    def max_abs(self) -> float:
        return float(self.moduli().max())

    def frobenius_norm(self) -> float:
        return float(np.sqrt(np.power(self.data, 2).sum()))

    def allclose(self, other: "QMatrix", tol: float = 1e-12) -> bool:
        return self.shape == other.shape and (self - other).max_abs() <= tol

    def to_payload(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.data.reshape(-1, 4).tolist(),
        }

    def __repr__(self) -> str:
        return f"QMatrix(rows={self.rows}, cols={self.cols})"
