import sys

from pydantic import ValidationError

from src.models.error import ErrorType
from src.models.schemas import Error, FieldErrorItem
from src.views import BaseView


class ToolkitError(Exception):
    def __init__(
            self,
            message: str = "Ошибка",
            exit_code: int = 1,
    ) -> None:
        self.message = message
        self.exit_code = exit_code
        super().__init__(message)


class PropertyViolation(ToolkitError):
    def __init__(self, message: str = "Нарушено проверяемое свойство") -> None:
        super().__init__(message=message, exit_code=1)


class BadRequest(ToolkitError):
    def __init__(self, message: str = "Неверный запрос") -> None:
        super().__init__(message=message, exit_code=2)


class DomainRejection(ToolkitError):
    def __init__(self, message: str = "Входные данные вне области определения") -> None:
        super().__init__(message=message, exit_code=3)


class ShapeMismatch(BadRequest):
    def __init__(self, message: str = "Несовместимые размеры матриц") -> None:
        super().__init__(message=message)


class SingularMatrix(DomainRejection):
    def __init__(self, message: str = "Матрица вырождена") -> None:
        super().__init__(message=message)


class ZeroVector(DomainRejection):
    def __init__(self, message: str = "Нулевой вектор не задает точку") -> None:
        super().__init__(message=message)


class NotUnitary(DomainRejection):
    def __init__(self, message: str = "Матрица не унитарна") -> None:
        super().__init__(message=message)


class NonNormalMatrix(DomainRejection):
    def __init__(self, message: str = "Спектр вычисляется только для нормальных матриц") -> None:
        super().__init__(message=message)


class RankDeficiency(DomainRejection):
    def __init__(self, message: str = "Столбцы матрицы линейно зависимы") -> None:
        super().__init__(message=message)


class ConvergenceError(PropertyViolation):
    def __init__(self, message: str = "Собственные значения не сошлись") -> None:
        super().__init__(message=message)


class PairingError(PropertyViolation):
    def __init__(self, message: str = "Собственные значения не разбиваются на сопряженные пары") -> None:
        super().__init__(message=message)


class NotInterior(DomainRejection):
    def __init__(self, message: str = "Точка не лежит внутри пространства") -> None:
        super().__init__(message=message)


class ChartError(DomainRejection):
    def __init__(self, message: str = "Точка q_∞ не лежит в карте") -> None:
        super().__init__(message=message)


class NotAnIsometry(DomainRejection):
    def __init__(self, message: str = "Матрица не сохраняет эрмитову форму") -> None:
        super().__init__(message=message)


class IndeterminateClassification(DomainRejection):
    def __init__(self, message: str = "Тип изометрии численно не определен") -> None:
        super().__init__(message=message)


class FixesOrigin(DomainRejection):
    def __init__(self, message: str = "Изометрия оставляет начало координат на месте") -> None:
        super().__init__(message=message)


class NotVertical(DomainRejection):
    def __init__(self, message: str = "Образ начала координат не лежит на вертикальной геодезической") -> None:
        super().__init__(message=message)


class DirichletSearchExhausted(PropertyViolation):
    def __init__(self, message: str = "Не найден знаменатель q в допустимом диапазоне") -> None:
        super().__init__(message=message)


class ApproximationFailure(PropertyViolation):
    def __init__(self, message: str = "Оценка ‖R^q − I‖ ≤ π/Q не выполнена") -> None:
        super().__init__(message=message)


def _error_type(exc: ToolkitError) -> ErrorType:
    if isinstance(exc, PropertyViolation):
        return ErrorType.VIOLATION
    if isinstance(exc, DomainRejection):
        return ErrorType.REJECTION
    return ErrorType.MESSAGE


def handle_toolkit_error(exc: ToolkitError, stream=None) -> int:
    stream = stream or sys.stderr
    stream.write(
        BaseView(
            error=Error(
                type=_error_type(exc),
                content=exc.message,
                kind=type(exc).__name__,
                exit_code=exc.exit_code,
            )
        ).model_dump_json() + "\n"
    )
    return exc.exit_code


def handle_validation_error(exc: ValidationError, stream=None) -> int:
    stream = stream or sys.stderr
    content = []
    for error in exc.errors():
        location = list(error.get('loc', []))
        field = location[-1] if location else 'none'
        message = error.get('msg', 'No message')
        error_type = error.get('type', 'empty')

        if error_type == "missing":
            message = "Поле является обязательным"
        elif error_type == "value_error":
            message = ", ".join(str(arg) for arg in error['ctx']['error'].args)

        content.append(
            FieldErrorItem(
                field=field,
                location=location,
                message=message,
                type=error_type
            )
        )

    stream.write(
        BaseView(
            error=Error(
                type=ErrorType.FIELD_LIST,
                content=content,
                kind=type(exc).__name__,
                exit_code=2,
            )
        ).model_dump_json() + "\n"
    )
    return 2
