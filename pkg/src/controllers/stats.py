from src.models.schemas import RunConfig
from src.services import ServiceFactory
from src.utils.router import CommandRouter, argument
from src.views import BaseView

router = CommandRouter()


@router.command(
    "version",
    help="Информация о приложении",
    arguments=[argument("--details", action="store_true")],
)
def version(args, run: RunConfig, services: ServiceFactory) -> tuple[BaseView, int]:
    """
    Получить информацию о приложении
    """
    return BaseView(content=services.stats.get_stats(args.details)), 0
