from pydantic import BaseModel, field_validator

from src.models.state import OutputFormat


class RunConfig(BaseModel):
    command: str
    n: int = 2
    Q: int = 9
    samples: int = 100
    seed: int = 0
    workers: int = 1
    tolerance_overrides: dict[str, float] = {}
    output_format: OutputFormat = OutputFormat.CSV
    output_path: str | None = None

    @field_validator('n')
    def n_must_be_valid(cls, value):
        if value < 2:
            raise ValueError("Кватернионная размерность должна быть n ≥ 2")
        return value

    @field_validator('Q')
    def q_must_be_valid(cls, value):
        if value < 2:
            raise ValueError("Параметр Q должен быть не меньше 2")
        return value

    @field_validator('samples', 'workers')
    def count_must_be_positive(cls, value):
        if value < 1:
            raise ValueError("Значение должно быть положительным")
        return value
