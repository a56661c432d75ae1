from src.models.schemas import RunConfig
from src.models.state import Suite
from src.services import ServiceFactory
from src.utils.router import CommandRouter, argument
from src.views import SuiteResponse

router = CommandRouter()


@router.command(
    "verify",
    help="Проверка неравенств на случайных выборках",
    arguments=[
        argument("--suite", type=Suite, choices=[item.value for item in Suite], default=Suite.ALL),
        argument("--samples", type=int, default=None),
        argument("--seed", type=int, default=None),
        argument("--n", type=int, default=None),
        argument("--Q", type=int, default=None),
    ],
)
def verify(args, run: RunConfig, services: ServiceFactory) -> tuple[SuiteResponse, int]:
    """
    Прогнать набор проверок

    Код выхода 1, если есть хотя бы одно нарушение
    """
    reports = services.verification.run(args.suite, run.samples, run.seed, run.n, run.Q)
    violations = sum(report.violations for report in reports)
    return SuiteResponse(content=reports), 1 if violations else 0
