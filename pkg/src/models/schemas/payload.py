from pydantic import BaseModel, field_validator, ValidationInfo


def _check_quaternion(item: list[float]) -> list[float]:
    if len(item) != 4:
        raise ValueError("Кватернион задается массивом [w, x, y, z]")
    return item


class MatrixPayload(BaseModel):
    rows: int
    cols: int
    entries: list[list[float]]

    @field_validator('rows', 'cols')
    def size_must_be_positive(cls, value):
        if value < 1:
            raise ValueError("Размер матрицы должен быть положительным")
        return value

    @field_validator('entries')
    def entries_must_match_shape(cls, value, info: ValidationInfo):
        for item in value:
            _check_quaternion(item)
        rows, cols = info.data.get('rows'), info.data.get('cols')
        if rows is not None and cols is not None and len(value) != rows * cols:
            raise ValueError(f"Ожидалось {rows * cols} элементов, получено {len(value)}")
        return value


class PointPayload(BaseModel):
    coords: list[list[float]]

    @field_validator('coords')
    def coords_must_be_quaternions(cls, value):
        if not value:
            raise ValueError("Пустой вектор")
        for item in value:
            _check_quaternion(item)
        return value


class HorosphericalPayload(BaseModel):
    xi: list[list[float]]
    v: list[float]
    u: float

    @field_validator('xi')
    def xi_must_be_quaternions(cls, value):
        for item in value:
            _check_quaternion(item)
        return value

    @field_validator('v')
    def v_must_be_imaginary(cls, value):
        if len(value) != 3:
            raise ValueError("Координата v задается тремя мнимыми компонентами [x, y, z]")
        return value

    @field_validator('u')
    def u_must_be_non_negative(cls, value):
        if value < 0:
            raise ValueError("Горосферическая высота не может быть отрицательной")
        return value
