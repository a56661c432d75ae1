import csv
import io
import json
import sys
from functools import singledispatch

from src.models import schemas
from src.models.state import OutputFormat
from src.views import BaseView, ConstantsReport


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def render_table(fields: list[str], rows: list[dict]) -> str:
    """
    Таблица CSV с заданным заголовком

    :param fields: заголовок
    :param rows: строки (лишние ключи игнорируются)
    :return:
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_cell(row.get(name)) for name in fields])
    return buffer.getvalue()


@singledispatch
def to_csv(content) -> str:
    raise TypeError(f"Нет CSV-представления для {type(content).__name__}")


@to_csv.register
def _(content: ConstantsReport) -> str:
    row = {
        **content.constants.model_dump(),
        "Q": content.margin.Q,
        "bound": content.margin.bound,
        "verdict": content.margin.verdict,
    }
    return render_table(["n", "Q", "tau", "omega", "lambda_n", "bound", "verdict"], [row])


@to_csv.register
def _(content: schemas.BoundReport) -> str:
    return render_table(schemas.BOUND_REPORT_CSV_FIELDS, [content.model_dump()])


@to_csv.register
def _(content: schemas.VolumeTable) -> str:
    balls = render_table(schemas.VOLUME_CSV_FIELDS, [row.model_dump() for row in content.balls])
    if not content.lower_bounds:
        return balls
    lower = render_table(schemas.LOWER_BOUND_CSV_FIELDS, [row.model_dump() for row in content.lower_bounds])
    return balls + "\n" + lower


@to_csv.register
def _(content: schemas.DistanceResult) -> str:
    return render_table(["model", "distance"], [content.model_dump()])


@to_csv.register
def _(content: list) -> str:
    rows = [check.model_dump() for report in content for check in report.checks]
    return render_table(schemas.SUITE_CSV_FIELDS, rows)


@to_csv.register
def _(content: dict) -> str:
    rows = [
        {"key": key, "value": json.dumps(value, sort_keys=True) if isinstance(value, dict) else value}
        for key, value in content.items()
    ]
    return render_table(["key", "value"], rows)


def render(view: BaseView, output_format: OutputFormat) -> str:
    if output_format == OutputFormat.JSON:
        return view.model_dump_json(indent=2) + "\n"
    return to_csv(view.content)


def write_output(text: str, path: str | None = None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        stream.write(text)
