from pydantic import BaseModel

from src.models import schemas
from src.views.base import BaseView


class ConstantsReport(BaseModel):
    constants: schemas.BoundConstants
    margin: schemas.TheoremMargin


class ConstantsResponse(BaseView):
    content: ConstantsReport
