from src.controllers import certify
from src.controllers import constants
from src.controllers import distance
from src.controllers import stats
from src.controllers import verify
from src.controllers import volume
from src.models.state import OutputFormat
from src.utils.router import CommandRouter, argument

COMMON_ARGUMENTS = [
    argument("--format", dest="output_format", choices=[item.value for item in OutputFormat], default=None),
    argument("--out", dest="output_path", default=None, help="файл для отчета (по умолчанию stdout)"),
    argument("--tol", dest="tolerances", action="append", default=[], metavar="NAME=VALUE"),
    argument("--workers", type=int, default=None, help="число потоков для выборок"),
]


def register_cli_router() -> CommandRouter:
    root_router = CommandRouter()

    root_router.include_router(constants.router)
    root_router.include_router(verify.router)
    root_router.include_router(certify.router)
    root_router.include_router(volume.router)
    root_router.include_router(distance.router)
    root_router.include_router(stats.router)

    return root_router
