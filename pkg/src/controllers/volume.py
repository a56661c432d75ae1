from src.models.schemas import RunConfig
from src.services import ServiceFactory
from src.utils.router import CommandRouter, argument
from src.views import VolumeResponse

router = CommandRouter()


@router.command(
    "volume",
    help="Объемы шаров и нижние оценки объема многообразия",
    arguments=[
        argument("--n-max", dest="n_max", type=int, default=3),
        argument("--radius", dest="radii", type=float, action="append", default=None),
    ],
)
def volume(args, run: RunConfig, services: ServiceFactory) -> tuple[VolumeResponse, int]:
    table = services.volume.get_table(args.n_max, args.radii or [1.0])
    return VolumeResponse(content=table), 0
