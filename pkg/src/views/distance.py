from src.models import schemas
from src.views.base import BaseView


class DistanceResponse(BaseView):
    content: schemas.DistanceResult
