import json
from pathlib import Path

from src import exceptions
from src.models import schemas
from src.models.geometry import ModelForm, ProjectivePoint, HorosphericalCoords
from src.models.qmatrix import QMatrix
from src.models.quaternion import Quaternion
from src.models.state import ModelKind
from src.services.numeric import geometry


def load_json(source: str):
    """
    JSON из файла (путь или @путь) либо из самой строки

    :param source: путь к файлу или JSON-текст
    :return:
    """
    text = source
    path = Path(source[1:] if source.startswith("@") else source)
    if source.startswith("@") or not source.lstrip().startswith(("[", "{")):
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise exceptions.BadRequest(f"Не удалось прочитать файл {path}: {exc.strerror}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise exceptions.BadRequest(f"Некорректный JSON: {exc.msg} (строка {exc.lineno})")


def parse_matrix(data) -> QMatrix:
    payload = schemas.MatrixPayload.model_validate(data)
    return QMatrix.from_entries(
        payload.rows,
        payload.cols,
        [Quaternion.from_list(item) for item in payload.entries],
    )


def parse_point(data, model: ModelKind) -> ProjectivePoint:
    """
    Точка из однородного вектора ([[w,x,y,z], ...] или {"coords": ...})
    либо из горосферических координат {"xi": ..., "v": ..., "u": ...}
    """
    if isinstance(data, dict) and "xi" in data:
        payload = schemas.HorosphericalPayload.model_validate(data)
        point = geometry.from_horospherical(
            HorosphericalCoords(
                xi=tuple(Quaternion.from_list(item) for item in payload.xi),
                v=Quaternion(0.0, *payload.v),
                u=payload.u,
            )
        )
        if model == ModelKind.BALL:
            return ProjectivePoint(geometry.cayley_to_ball(point), ModelForm.ball(point.form.n))
        return point

    payload = schemas.PointPayload.model_validate(data if isinstance(data, dict) else {"coords": data})
    coords = QMatrix.column([Quaternion.from_list(item) for item in payload.coords])
    return ProjectivePoint(coords, ModelForm.of_kind(coords.rows - 1, model))
