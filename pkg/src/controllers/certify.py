from src.models.schemas import RunConfig
from src.services import ServiceFactory
from src.utils import payloads
from src.utils.router import CommandRouter, argument
from src.views import BoundReportResponse

router = CommandRouter()


@router.command(
    "certify",
    help="Цепочка оценок для матрицы из Sp(n,1)",
    arguments=[
        argument("--matrix", required=True, help="JSON-файл {rows, cols, entries}"),
        argument("--Q", type=int, default=None),
    ],
)
def certify(args, run: RunConfig, services: ServiceFactory) -> tuple[BoundReportResponse, int]:
    """
    Сертифицировать смещение начала координат

    Матрица с дефектом формы больше 1e-6 отклоняется (код 3)
    """
    matrix = payloads.parse_matrix(payloads.load_json(args.matrix))
    report = services.certification.certify(matrix, run.Q)
    return BoundReportResponse(content=report), 0
