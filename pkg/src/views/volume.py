from src.models import schemas
from src.views.base import BaseView


class VolumeResponse(BaseView):
    content: schemas.VolumeTable
