from typing import Any

from src.models.error import ErrorType
from pydantic import BaseModel


class Error(BaseModel):
    type: ErrorType
    content: Any
    kind: str | None = None
    exit_code: int = 2


class FieldErrorItem(BaseModel):
    field: str | int
    location: list[str | int]
    message: str
    type: str
