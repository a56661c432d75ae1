from pydantic import BaseModel, field_validator


class VolumeResult(BaseModel):
    n: int
    R: float
    volume: float
    sigma_4n: float
    log_volume: float | None = None

    @field_validator('volume')
    def volume_must_be_non_negative(cls, value):
        if value < 0:
            raise ValueError("Объем не может быть отрицательным")
        return value


class VolumeLowerBound(BaseModel):
    n: int
    lambda_n: float
    radius: float
    volume_recomputed: float
    volume_printed: float
    log_volume_recomputed: float
    log_volume_printed: float


class VolumeTable(BaseModel):
    balls: list[VolumeResult]
    lower_bounds: list[VolumeLowerBound]


VOLUME_CSV_FIELDS = ["n", "R", "volume"]
LOWER_BOUND_CSV_FIELDS = [
    "n", "lambda_n", "radius", "volume_recomputed", "volume_printed", "log_volume_recomputed", "log_volume_printed",
]
