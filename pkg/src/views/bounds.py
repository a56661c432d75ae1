from src.models import schemas
from src.views.base import BaseView


class BoundReportResponse(BaseView):
    content: schemas.BoundReport


class SuiteResponse(BaseView):
    content: list[schemas.SuiteReport]
