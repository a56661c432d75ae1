from src.models.schemas import RunConfig
from src.models.state import ModelKind
from src.services import ServiceFactory
from src.utils import payloads
from src.utils.router import CommandRouter, argument
from src.views import DistanceResponse

router = CommandRouter()


@router.command(
    "distance",
    help="Расстояние между двумя внутренними точками",
    arguments=[
        argument("--a", dest="point_a", required=True, help="JSON-точка или путь к файлу"),
        argument("--b", dest="point_b", required=True, help="JSON-точка или путь к файлу"),
        argument("--model", type=ModelKind, choices=[item.value for item in ModelKind], default=ModelKind.HALF_SPACE),
    ],
)
def distance(args, run: RunConfig, services: ServiceFactory) -> tuple[DistanceResponse, int]:
    """
    Получить ρ(a, b)

    Точка вне пространства отклоняется (код 3)
    """
    point_a = payloads.parse_point(payloads.load_json(args.point_a), args.model)
    point_b = payloads.parse_point(payloads.load_json(args.point_b), args.model)
    return DistanceResponse(content=services.distance.get_distance(point_a, point_b)), 0
