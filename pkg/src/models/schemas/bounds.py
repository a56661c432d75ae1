from pydantic import BaseModel, field_validator

from src.models.state import CertifyOutcome, IsometryClass


class BoundConstants(BaseModel):
    n: int
    tau: float
    omega: float
    omega_printed_relation: float
    lambda_n: float
    lambda_parity_corrected: float

    class Config:
        from_attributes = True


class MarginReading(BaseModel):
    name: str
    lambda_used: float
    q_max: int
    r_max: float
    bound: float
    verdict: bool


class TheoremMargin(BaseModel):
    n: int
    Q: int
    bound: float
    omega: float
    verdict: bool
    readings: list[MarginReading]


class DirichletResult(BaseModel):
    q: int
    p: list[int]
    errors: list[float]
    Q: int

    @field_validator('q')
    def q_must_be_positive(cls, value):
        if value < 1:
            raise ValueError("Знаменатель q должен быть положительным")
        return value

    @property
    def max_error(self) -> float:
        return max(self.errors)


class ApproximationCertificate(BaseModel):
    n: int
    Q: int
    q: int
    bound: float
    achieved: float
    angle_estimate: float
    thetas: list[float]
    numerators: list[int]
    search_limit: int
    within_stated_range: bool


class BoundReport(BaseModel):
    outcome: CertifyOutcome = CertifyOutcome.CERTIFIED
    n: int
    Q: int
    q: int | None = None
    delta: float | None = None
    r: float | None = None
    norm_A: float | None = None
    norm_Aq: float | None = None
    norm_Aq_minus_I: float | None = None
    norm_Aq_minus_Rq: float | None = None
    rotation_achieved: float | None = None
    lemma_bound: float | None = None
    product: float | None = None
    omega: float
    verdict: bool | None = None
    within_stated_range: bool | None = None
    isometry_class: IsometryClass | None = None
    slack_norm_A: float | None = None
    slack_power_gap: float | None = None
    slack_resume: float | None = None
    slack_omega: float | None = None

    def lemmas_hold(self, norm_tol: float = 1e-9, tol: float = 1e-8) -> bool:
        if self.outcome == CertifyOutcome.FIXES_ORIGIN:
            return True
        return (
                self.slack_norm_A >= -norm_tol and
                self.slack_power_gap >= -tol and
                self.slack_resume >= -tol
        )


BOUND_REPORT_CSV_FIELDS = ["n", "Q", "q", "delta", "r", "product", "lemma_bound", "omega", "verdict"]
