import math
from dataclasses import dataclass
from numbers import Real

from src import exceptions


@dataclass(frozen=True, slots=True)
class Quaternion:
    """
    Кватернион w + x·i + y·j + z·k

    Коэффициенты могут быть любыми вещественными числами (float, Fraction),
    арифметика их не приводит к float.
    """
    w: Real = 0
    x: Real = 0
    y: Real = 0
    z: Real = 0

    @classmethod
    def real(cls, value: Real) -> "Quaternion":
        return cls(value, 0, 0, 0)

    @classmethod
    def from_list(cls, values) -> "Quaternion":
        values = list(values)
        if len(values) != 4:
            raise exceptions.BadRequest("Кватернион задается массивом [w, x, y, z]")
        return cls(*values)

    def to_list(self) -> list[float]:
        return [float(self.w), float(self.x), float(self.y), float(self.z)]

    @property
    def imaginary(self) -> "Quaternion":
        return Quaternion(0, self.x, self.y, self.z)

    def norm2(self) -> Real:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def modulus(self) -> float:
        return math.sqrt(self.norm2())

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> "Quaternion":
        norm2 = self.norm2()
        if norm2 == 0:
            raise exceptions.SingularMatrix("Нулевой кватернион необратим")
        return Quaternion(self.w / norm2, -self.x / norm2, -self.y / norm2, -self.z / norm2)

    def __add__(self, other) -> "Quaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other) -> "Quaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __rsub__(self, other) -> "Quaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other) -> "Quaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other) -> "Quaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, self)

    def __truediv__(self, other) -> "Quaternion":
        if isinstance(other, Real):
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other.inverse())

    def __abs__(self) -> float:
        return self.modulus()

    def is_close(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (self - other).modulus() <= tol


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, Real):
        return Quaternion.real(value)
    return NotImplemented


ONE = Quaternion(1, 0, 0, 0)
UNIT_I = Quaternion(0, 1, 0, 0)
UNIT_J = Quaternion(0, 0, 1, 0)
UNIT_K = Quaternion(0, 0, 0, 1)


@dataclass(frozen=True, slots=True)
class UnitImaginary:
    """Ось μ, μ² = −1"""
    x: float
    y: float
    z: float

    def __post_init__(self):
        if abs(self.x * self.x + self.y * self.y + self.z * self.z - 1) > 1e-12:
            raise exceptions.BadRequest("Ось должна быть единичным чисто мнимым кватернионом")

    @classmethod
    def normalized(cls, x: float, y: float, z: float) -> "UnitImaginary":
        norm = math.sqrt(x * x + y * y + z * z)
        if norm == 0:
            raise exceptions.ZeroVector("Нулевая ось")
        return cls(x / norm, y / norm, z / norm)

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0, self.x, self.y, self.z)


@dataclass(frozen=True, slots=True)
class ComplexRep:
    """Представитель класса сопряженности в ℂ⁺ ∪ ℝ"""
    re: float
    im: float

    def __post_init__(self):
        if self.im < 0:
            raise exceptions.BadRequest("Мнимая часть представителя должна быть неотрицательной")

    def modulus(self) -> float:
        return math.hypot(self.re, self.im)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """
    Произведение Гамильтона, ij = k = −ji
    """
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def exp_mu(axis: UnitImaginary, theta: float) -> Quaternion:
    """
    cos(θ) + μ·sin(θ)
    """
    s = math.sin(theta)
    return Quaternion(math.cos(theta), axis.x * s, axis.y * s, axis.z * s)


def canonical_rep(q: Quaternion) -> ComplexRep:
    """
    Представитель класса сопряженности q в ℂ⁺: (w, |Im q|)
    """
    return ComplexRep(float(q.w), math.sqrt(float(q.x * q.x + q.y * q.y + q.z * q.z)))
