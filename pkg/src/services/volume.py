import logging

from src import exceptions
from src.models import schemas
from src.services.numeric import volume


class VolumeApplicationService:

    def __init__(self, config):
        self._config = config
        self._log = logging.getLogger(__name__)

    def get_table(self, n_max: int, radii: list[float]) -> schemas.VolumeTable:
        """
        Таблица объемов шаров и нижних оценок объема многообразия

        :param n_max: наибольшая размерность (n_max ≥ 1)
        :param radii: радиусы шаров
        :return:
        """
        if n_max < 1:
            raise exceptions.BadRequest("Требуется n_max ≥ 1")
        if not radii:
            raise exceptions.BadRequest("Не задан ни один радиус")
        if any(radius < 0 for radius in radii):
            raise exceptions.BadRequest("Радиусы должны быть неотрицательными")

        balls = [volume.ball_volume(n, radius) for n in range(1, n_max + 1) for radius in radii]
        lower_bounds = [
            volume.manifold_volume_lower_bound(n, self._config.DEFAULTS.Q)
            for n in range(2, n_max + 1)
        ]
        self._log.debug("Объемы: %d строк, нижние оценки: %d строк", len(balls), len(lower_bounds))
        return schemas.VolumeTable(balls=balls, lower_bounds=lower_bounds)
