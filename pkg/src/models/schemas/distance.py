from pydantic import BaseModel

from src.models.state import ModelKind


class DistanceResult(BaseModel):
    model: ModelKind
    distance: float
