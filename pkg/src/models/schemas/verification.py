from pydantic import BaseModel

from src.models.state import Suite


class InequalityCheck(BaseModel):
    suite: Suite
    name: str
    count: int = 0
    violations: int = 0
    worst_slack: float | None = None

    def record(self, slack: float, tol: float = 0.0) -> None:
        self.count += 1
        if self.worst_slack is None or slack < self.worst_slack:
            self.worst_slack = slack
        if slack < -tol:
            self.violations += 1

    def fail(self) -> None:
        self.count += 1
        self.violations += 1


class SuiteReport(BaseModel):
    suite: Suite
    n: int
    Q: int
    samples: int
    seed: int
    violations: int
    checks: list[InequalityCheck]


SUITE_CSV_FIELDS = ["suite", "name", "count", "violations", "worst_slack"]
