from src.models.schemas import RunConfig
from src.services import ServiceFactory
from src.utils.router import CommandRouter, argument
from src.views import ConstantsResponse

router = CommandRouter()


@router.command(
    "constants",
    help="Константы τ, ω, λ_n и запас итоговой оценки",
    arguments=[
        argument("--n", type=int, default=None, help="кватернионная размерность (n ≥ 2)"),
        argument("--Q", type=int, default=None, help="параметр приближения (по умолчанию 9)"),
        argument("--omega", type=float, default=None, help="порог вместо ω"),
    ],
)
def constants(args, run: RunConfig, services: ServiceFactory) -> tuple[ConstantsResponse, int]:
    """
    Получить τ, ω, λ_n и оценку итоговой теоремы

    Исход всегда успешный, вердикт передается в отчете
    """
    report = services.constants.get_constants(run.n, run.Q, omega=args.omega)
    return ConstantsResponse(content=report), 0
