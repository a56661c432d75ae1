from src import exceptions
from src.models import schemas
from src.models.geometry import ProjectivePoint
from src.models.state import ModelKind
from src.services.numeric import geometry


class DistanceApplicationService:

    def __init__(self, config):
        self._config = config

    def get_distance(self, point_a: ProjectivePoint, point_b: ProjectivePoint) -> schemas.DistanceResult:
        if point_a.form != point_b.form:
            raise exceptions.BadRequest("Точки заданы в разных моделях или размерностях")
        rho = geometry.distance(
            point_a,
            point_b,
            tol=self._config.TOLERANCE.NULL_CONE,
            arccosh_tol=self._config.TOLERANCE.ARCCOSH,
        )
        return schemas.DistanceResult(model=ModelKind(point_a.form.kind), distance=rho)
